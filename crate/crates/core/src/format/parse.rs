use std::collections::{BTreeSet, HashMap};
use std::fmt;

use super::document::SrsDocument;
use super::lex::{column, logical_lines, read_quoted, strip_comment};
use crate::relation::{RelationEdge, RelationKind};
use crate::taxonomy::{Category, Classification, ElementId, Glossary, NotationTag, RequirementElement, Subcategory};

/// Deepest nesting level accepted; keeps recursive consumers safe.
pub const MAX_DEPTH: usize = 256;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ParseErrorKind {
    Syntax,
    DuplicateId,
    UnknownCategory,
    UnknownSubcategory,
    UnknownRelation,
    UnknownNotation,
    DanglingEndpoint,
    SelfEdge,
    BadIndent,
}

impl ParseErrorKind {
    pub fn name(self) -> &'static str {
        match self {
            ParseErrorKind::Syntax => "syntax",
            ParseErrorKind::DuplicateId => "duplicate-id",
            ParseErrorKind::UnknownCategory => "unknown-category",
            ParseErrorKind::UnknownSubcategory => "unknown-subcategory",
            ParseErrorKind::UnknownRelation => "unknown-relation",
            ParseErrorKind::UnknownNotation => "unknown-notation",
            ParseErrorKind::DanglingEndpoint => "dangling-endpoint",
            ParseErrorKind::SelfEdge => "self-edge",
            ParseErrorKind::BadIndent => "bad-indent",
        }
    }
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub file: String,
    /// 1-based.
    pub line: usize,
    /// 1-based, in characters.
    pub column: usize,
    pub kind: ParseErrorKind,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}:{}:{}: {}: {}",
            self.file, self.line, self.column, self.kind, self.message
        )
    }
}

impl std::error::Error for ParseError {}

pub fn parse(input: &str) -> Result<SrsDocument, Vec<ParseError>> {
    parse_named("-", input)
}

/// Parses `input`, reporting errors against `file`. All recoverable errors
/// are collected; the document is returned only when there are none.
pub fn parse_named(file: &str, input: &str) -> Result<SrsDocument, Vec<ParseError>> {
    let mut p = Parser::new(file);
    for line in logical_lines(input) {
        p.line(line.number, &line.text);
    }
    p.finish()
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    Elements,
    Glossary,
    Relations,
}

struct Record {
    id: Option<ElementId>,
    parent: Option<usize>,
    body: Option<Body>,
}

struct Body {
    classification: Classification,
    notation: NotationTag,
    notation_col: usize,
    text: String,
    line: usize,
}

struct Parser<'f> {
    file: &'f str,
    errors: Vec<ParseError>,
    mode: Mode,
    block_line: usize,
    seen_content: bool,
    title: Option<String>,
    notations: BTreeSet<NotationTag>,
    glossary: Glossary,
    records: Vec<Record>,
    ids: HashMap<ElementId, usize>,
    /// (depth, record) of the open ancestors.
    stack: Vec<(usize, usize)>,
    /// Declared edge plus the columns of its endpoints.
    edges: Vec<(RelationEdge, usize, usize)>,
}

type Fail = (usize, ParseErrorKind, String);

fn syntax(col: usize, msg: impl Into<String>) -> Fail {
    (col, ParseErrorKind::Syntax, msg.into())
}

impl<'f> Parser<'f> {
    fn new(file: &'f str) -> Self {
        Parser {
            file,
            errors: Vec::new(),
            mode: Mode::Elements,
            block_line: 0,
            seen_content: false,
            title: None,
            notations: BTreeSet::new(),
            glossary: Glossary::new(),
            records: Vec::new(),
            ids: HashMap::new(),
            stack: Vec::new(),
            edges: Vec::new(),
        }
    }

    fn error(&mut self, line: usize, col: usize, kind: ParseErrorKind, message: impl Into<String>) {
        self.errors.push(ParseError {
            file: self.file.to_string(),
            line,
            column: col,
            kind,
            message: message.into(),
        });
    }

    fn line(&mut self, number: usize, raw: &str) {
        let text = strip_comment(raw);
        if text.trim().is_empty() {
            return;
        }
        let first = !self.seen_content;
        self.seen_content = true;
        let trimmed = text.trim_start();
        let lead = text.len() - trimmed.len();
        let result = if trimmed.starts_with('@') {
            self.directive(number, text, lead, first)
        } else {
            match self.mode {
                Mode::Elements => self.element(number, text),
                Mode::Glossary => self.glossary_line(text, lead),
                Mode::Relations => self.relation(number, text),
            }
        };
        if let Err((col, kind, msg)) = result {
            self.error(number, col, kind, msg);
        }
    }

    fn directive(&mut self, number: usize, text: &str, lead: usize, first: bool) -> Result<(), Fail> {
        let body = &text[lead..];
        let word_end = body.find(char::is_whitespace).unwrap_or(body.len());
        let word = &body[..word_end];
        let rest = &body[word_end..];
        let rest_col = column(text, lead + word_end);
        let col = column(text, lead);

        if word == "@end" {
            if self.mode == Mode::Elements {
                return Err(syntax(col, "`@end` without an open block"));
            }
            self.mode = Mode::Elements;
            return expect_empty(rest, rest_col);
        }
        if self.mode != Mode::Elements {
            // Recover by closing the open block before handling the directive.
            self.mode = Mode::Elements;
            self.error(
                number,
                col,
                ParseErrorKind::Syntax,
                format!("expected `@end` before `{word}`"),
            );
        }
        match word {
            "@document" => {
                if !first {
                    return Err(syntax(col, "`@document` must be the first line"));
                }
                let rest_trim = rest.trim_start();
                let at = text.len() - rest_trim.len();
                let (title, used) = read_quoted(rest_trim).map_err(|(o, m)| syntax(column(text, at + o), m))?;
                self.title = Some(title);
                expect_empty(&rest_trim[used..], column(text, at + used))
            }
            "@notations" => {
                let mut offset = lead + word_end;
                for token in rest.split_whitespace() {
                    let at = offset + text[offset..].find(token).unwrap_or(0);
                    offset = at + token.len();
                    match NotationTag::new(token) {
                        Some(tag) => {
                            self.notations.insert(tag);
                        }
                        None => {
                            self.error(
                                number,
                                column(text, at),
                                ParseErrorKind::Syntax,
                                format!("invalid notation tag `{token}`"),
                            );
                        }
                    }
                }
                Ok(())
            }
            "@glossary" | "@relations" => {
                self.mode = if word == "@glossary" {
                    Mode::Glossary
                } else {
                    Mode::Relations
                };
                self.block_line = number;
                expect_empty(rest, rest_col)
            }
            _ => Err(syntax(col, format!("unknown directive `{word}`"))),
        }
    }

    fn glossary_line(&mut self, text: &str, lead: usize) -> Result<(), Fail> {
        let body = &text[lead..];
        let Some(after) = body.strip_prefix("term") else {
            return Err(syntax(
                column(text, lead),
                "expected `term \"<phrase>\": \"<definition>\"`",
            ));
        };
        let after_trim = after.trim_start();
        if after_trim.len() == after.len() {
            return Err(syntax(column(text, lead + 4), "expected whitespace after `term`"));
        }
        let at = text.len() - after_trim.len();
        let (term, used) = read_quoted(after_trim).map_err(|(o, m)| syntax(column(text, at + o), m))?;
        let rest = &after_trim[used..];
        let rest_trim = rest.trim_start();
        let colon_at = text.len() - rest_trim.len();
        let Some(def_part) = rest_trim.strip_prefix(':') else {
            return Err(syntax(column(text, colon_at), "expected `:` after the term"));
        };
        let def_trim = def_part.trim_start();
        let def_at = text.len() - def_trim.len();
        let (definition, used) = read_quoted(def_trim).map_err(|(o, m)| syntax(column(text, def_at + o), m))?;
        expect_empty(&def_trim[used..], column(text, def_at + used))?;
        if crate::taxonomy::fold_term(&term).is_empty() {
            return Err(syntax(column(text, at), "empty glossary term"));
        }
        self.glossary.insert(term, definition).map_err(|e| {
            (
                column(text, at),
                ParseErrorKind::DuplicateId,
                format!("duplicate glossary term `{}`", e.term),
            )
        })
    }

    fn relation(&mut self, number: usize, text: &str) -> Result<(), Fail> {
        let mut tokens = Vec::new();
        let mut offset = 0;
        for token in text.split_whitespace() {
            let at = offset + text[offset..].find(token).unwrap_or(0);
            offset = at + token.len();
            tokens.push((column(text, at), token));
        }
        if tokens.len() != 3 {
            let col = tokens.first().map_or(1, |t| t.0);
            return Err(syntax(col, "expected `<id> <KIND> <id>`"));
        }
        let (fc, from) = tokens[0];
        let (kc, kind) = tokens[1];
        let (tc, to) = tokens[2];
        for (c, id) in [(fc, from), (tc, to)] {
            if !ElementId::is_valid(id) {
                return Err(syntax(c, format!("invalid element id `{id}`")));
            }
        }
        let kind = RelationKind::from_keyword(kind).ok_or_else(|| {
            (
                kc,
                ParseErrorKind::UnknownRelation,
                format!("unknown relation kind `{kind}`"),
            )
        })?;
        if from == to {
            return Err((
                fc,
                ParseErrorKind::SelfEdge,
                format!("`{from} {kind} {to}` relates an element to itself"),
            ));
        }
        self.edges
            .push((RelationEdge::declared(from, kind, to).at_line(number), fc, tc));
        Ok(())
    }

    fn element(&mut self, number: usize, text: &str) -> Result<(), Fail> {
        let body = text.trim_start_matches(' ');
        let indent = text.len() - body.len();
        if body.starts_with('\t') || body.starts_with(char::is_whitespace) {
            return Err((
                indent + 1,
                ParseErrorKind::BadIndent,
                "indentation must use spaces".into(),
            ));
        }
        if !indent.is_multiple_of(2) {
            return Err((
                indent + 1,
                ParseErrorKind::BadIndent,
                format!("indentation of {indent} spaces is not a multiple of two"),
            ));
        }
        let depth = indent / 2;
        if depth > MAX_DEPTH {
            return Err((
                1,
                ParseErrorKind::BadIndent,
                format!("nesting deeper than {MAX_DEPTH} levels"),
            ));
        }
        while self.stack.last().is_some_and(|&(d, _)| d >= depth) {
            self.stack.pop();
        }
        let parent = match self.stack.last() {
            Some(&(d, r)) if d + 1 == depth => Some(r),
            None if depth == 0 => None,
            _ => {
                return Err((
                    indent + 1,
                    ParseErrorKind::BadIndent,
                    "indentation skips a level".into(),
                ))
            }
        };

        let pos = self.records.len();
        self.records.push(Record {
            id: None,
            parent,
            body: None,
        });
        self.stack.push((depth, pos));

        let Some(after_open) = body.strip_prefix('[') else {
            return Err(syntax(indent + 1, "expected `[<id>]` or a directive"));
        };
        let close = after_open.find(']').ok_or_else(|| syntax(indent + 1, "unclosed `[`"))?;
        let id = &after_open[..close];
        if !ElementId::is_valid(id) {
            return Err(syntax(indent + 2, format!("invalid element id `{id}`")));
        }
        let id = ElementId::new(id);
        if let Some(&prev) = self.ids.get(&id) {
            let prev_line = self.records[prev].body.as_ref().map_or(0, |b| b.line);
            let msg = if prev_line > 0 {
                format!("element id `{id}` already defined on line {prev_line}")
            } else {
                format!("element id `{id}` already defined")
            };
            return Err((indent + 2, ParseErrorKind::DuplicateId, msg));
        }
        self.ids.insert(id.clone(), pos);
        self.records[pos].id = Some(id.clone());

        let head_at = indent + 1 + close + 1;
        let rest = &text[head_at..];
        let sep = rest
            .find("::")
            .ok_or_else(|| syntax(column(text, head_at), "expected `::` before the statement"))?;
        let head = &rest[..sep];
        let (classification, notation, notation_col) = parse_head(text, head_at, head)?;

        let stmt_at = head_at + sep + 2;
        let stmt = text[stmt_at..].trim();
        let stmt_start = stmt_at + (text[stmt_at..].len() - text[stmt_at..].trim_start().len());
        let statement = if stmt.starts_with('"') {
            let (s, used) = read_quoted(stmt).map_err(|(o, m)| syntax(column(text, stmt_start + o), m))?;
            expect_empty(&stmt[used..], column(text, stmt_start + used))?;
            s
        } else {
            stmt.to_string()
        };

        self.records[pos].body = Some(Body {
            classification,
            notation,
            notation_col,
            text: statement,
            line: number,
        });
        Ok(())
    }

    fn finish(mut self) -> Result<SrsDocument, Vec<ParseError>> {
        if self.mode != Mode::Elements {
            let what = if self.mode == Mode::Glossary {
                "@glossary"
            } else {
                "@relations"
            };
            let line = self.block_line;
            self.error(
                line,
                1,
                ParseErrorKind::Syntax,
                format!("`{what}` block is not closed with `@end`"),
            );
        }

        let mut late = Vec::new();
        for rec in &self.records {
            if let Some(body) = &rec.body {
                let tag = &body.notation;
                if !tag.is_canonical() && !self.notations.contains(tag) {
                    late.push((
                        body.line,
                        body.notation_col,
                        ParseErrorKind::UnknownNotation,
                        format!("notation `{tag}` is neither canonical nor declared in `@notations`"),
                    ));
                }
            }
        }
        for (edge, fc, tc) in &self.edges {
            for (id, col) in [(&edge.from, *fc), (&edge.to, *tc)] {
                if !self.ids.contains_key(id) {
                    late.push((
                        edge.line.unwrap_or(0),
                        col,
                        ParseErrorKind::DanglingEndpoint,
                        format!("relation endpoint `{id}` is not a defined element"),
                    ));
                }
            }
        }
        for (line, col, kind, msg) in late {
            self.error(line, col, kind, msg);
        }

        if !self.errors.is_empty() {
            let mut errors = self.errors;
            errors.sort_by_key(|e| (e.line, e.column, e.kind));
            return Err(errors);
        }

        let roots = build_forest(self.records);
        Ok(SrsDocument {
            title: self.title.unwrap_or_default(),
            notations: self.notations,
            glossary: self.glossary,
            roots,
            relations: self.edges.into_iter().map(|(e, _, _)| e).collect(),
            source: (self.file != "-").then(|| self.file.to_string()),
        })
    }
}

fn expect_empty(rest: &str, col: usize) -> Result<(), Fail> {
    let trimmed = rest.trim_start();
    if trimmed.is_empty() {
        Ok(())
    } else {
        let skip = rest.len() - trimmed.len();
        Err(syntax(col + rest[..skip].chars().count(), "unexpected trailing text"))
    }
}

/// Parses `category[(sub[, sub])] [notation]`, where `head` starts at byte
/// `at` of `line`.
fn parse_head(line: &str, at: usize, head: &str) -> Result<(Classification, NotationTag, usize), Fail> {
    let lead = head.len() - head.trim_start().len();
    if lead == 0 {
        return Err(syntax(column(line, at), "expected whitespace after `]`"));
    }
    let start = at + lead;
    let head = head[lead..].trim_end();
    let kw_end = head.find(|c: char| c == '(' || c.is_whitespace()).unwrap_or(head.len());
    let keyword = &head[..kw_end];
    if keyword.is_empty() {
        return Err(syntax(column(line, start), "expected a category keyword"));
    }
    let category = Category::from_keyword(keyword).ok_or_else(|| {
        (
            column(line, start),
            ParseErrorKind::UnknownCategory,
            format!("unknown category `{keyword}`"),
        )
    })?;

    let mut labels = Vec::new();
    let mut rest_at = kw_end;
    if head[kw_end..].starts_with('(') {
        let open = kw_end + 1;
        let close = head[open..]
            .find(')')
            .map(|i| open + i)
            .ok_or_else(|| syntax(column(line, start + kw_end), "unclosed `(`"))?;
        let inner = &head[open..close];
        let mut offset = open;
        for item in inner.split(',') {
            let item_at = offset + (item.len() - item.trim_start().len());
            offset += item.len() + 1;
            let word = item.trim();
            if word.is_empty() {
                return Err(syntax(column(line, start + item_at), "empty subcategory"));
            }
            let sub = Subcategory::from_keyword(word).ok_or_else(|| {
                (
                    column(line, start + item_at),
                    ParseErrorKind::UnknownSubcategory,
                    format!("unknown subcategory `{word}`"),
                )
            })?;
            labels.push(sub);
        }
        if labels.len() > 2 {
            return Err(syntax(column(line, start + open), "at most two subcategories"));
        }
        rest_at = close + 1;
    }

    let tail = &head[rest_at..];
    let mut notation = NotationTag::text();
    let mut notation_col = column(line, start + rest_at);
    let tokens: Vec<&str> = tail.split_whitespace().collect();
    match tokens.as_slice() {
        [] => {}
        [tag] => {
            if rest_at < head.len() && !tail.starts_with(char::is_whitespace) {
                return Err(syntax(notation_col, "expected whitespace before the notation"));
            }
            let tag_at = start + rest_at + tail.find(tag).unwrap_or(0);
            notation_col = column(line, tag_at);
            notation =
                NotationTag::new(tag).ok_or_else(|| syntax(notation_col, format!("invalid notation tag `{tag}`")))?;
        }
        _ => return Err(syntax(notation_col, "expected at most one notation tag before `::`")),
    }
    Ok((Classification::new(category, labels), notation, notation_col))
}

/// Assembles records (pre-order, each parent before its children) into a
/// forest without recursion.
fn build_forest(records: Vec<Record>) -> Vec<RequirementElement> {
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); records.len()];
    let mut roots = Vec::new();
    for (i, rec) in records.iter().enumerate() {
        match rec.parent {
            Some(p) => children[p].push(i),
            None => roots.push(i),
        }
    }
    let mut built: Vec<Option<RequirementElement>> = records
        .into_iter()
        .map(|rec| {
            let body = rec.body.expect("records are complete when there are no errors");
            let mut e = RequirementElement::new(
                rec.id.expect("records are complete when there are no errors"),
                body.classification,
                body.text,
            )
            .with_notation(body.notation);
            e.line = body.line;
            Some(e)
        })
        .collect();
    // Children always have larger positions, so a reverse sweep finishes
    // each subtree before attaching it.
    for i in (0..built.len()).rev() {
        if children[i].is_empty() {
            continue;
        }
        let kids = children[i]
            .iter()
            .map(|&c| built[c].take().expect("child attached once"))
            .collect();
        if let Some(e) = built[i].as_mut() {
            e.children = kids;
        }
    }
    roots
        .into_iter()
        .map(|r| built[r].take().expect("root attached once"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::taxonomy::{ConstraintNature, ConstraintSource};

    fn kinds(input: &str) -> Vec<(usize, ParseErrorKind)> {
        parse(input)
            .unwrap_err()
            .into_iter()
            .map(|e| (e.line, e.kind))
            .collect()
    }

    #[test]
    fn empty_input() {
        assert_eq!(parse("").unwrap(), SrsDocument::default());
        assert_eq!(parse("# only a comment\n\n").unwrap(), SrsDocument::default());
    }

    #[test]
    fn single_behavior() {
        let d = parse("[b1] behavior :: \"Display the list of available elements.\"").unwrap();
        assert_eq!(d.roots.len(), 1);
        let b = &d.roots[0];
        assert_eq!(b.category(), Category::Behavior);
        assert!(b.is_elementary());
        assert_eq!(b.notation, NotationTag::text());
        assert_eq!(b.text, "Display the list of available elements.");
        assert_eq!(b.line, 1);
    }

    #[test]
    fn dual_constraint() {
        let d = parse(
            "[c1] constraint(assumption, business-rule) :: \"the New York Stock Exchange is closed on Labor Day\"",
        )
        .unwrap();
        let c = &d.roots[0].classification;
        assert_eq!(c.category(), Category::Constraint);
        assert_eq!(c.nature(), Some(ConstraintNature::Assumption));
        assert_eq!(c.source(), Some(ConstraintSource::BusinessRule));
    }

    #[test]
    fn unknown_category() {
        let errs = parse("[x] widget :: \"...\"").unwrap_err();
        assert_eq!(errs.len(), 1);
        assert_eq!(errs[0].kind, ParseErrorKind::UnknownCategory);
        assert_eq!((errs[0].line, errs[0].column), (1, 5));
    }

    #[test]
    fn nesting_and_bare_text() {
        let src = "\
@document \"Demo\"
[s] meta :: Section 1
  [a] goal :: Reduce cost
  [b] goal(obstacle) diagram :: Legacy system
    [c] behavior(functional) :: Print # trailing comment
[t] task :: Train staff
";
        let d = parse(src).unwrap();
        assert_eq!(d.title, "Demo");
        assert_eq!(d.roots.len(), 2);
        assert_eq!(d.roots[0].children.len(), 2);
        assert_eq!(d.roots[0].children[1].children[0].text, "Print");
        assert_eq!(d.roots[0].children[1].notation.as_str(), "diagram");
        assert_eq!(d.roots[0].children[1].children[0].line, 5);
    }

    #[test]
    fn relations_and_glossary() {
        let src = "\
[a] goal :: \"A\"
[b] goal :: \"B\"
@glossary
term \"Order\": \"a purchase\"
@end
@relations
b EXTENDS a # why
@end
";
        let d = parse(src).unwrap();
        assert!(d.glossary.contains("order"));
        assert_eq!(d.relations.len(), 1);
        assert_eq!(d.relations[0].kind, RelationKind::Extends);
        assert_eq!(d.relations[0].line, Some(7));
    }

    #[test]
    fn recovery_collects_every_error() {
        let src = "\
[a] goal :: ok
[a] goal :: again
[b] gaol :: typo
[c] goal(widget) :: x
   [d] goal :: odd
\t[e] goal :: tab
[f] goal x y :: two notations
[g] goal sketch :: undeclared
@relations
a LIKES b
a EXTENDS a
a EXTENDS ghost
a EXTENDS
@end
";
        assert_eq!(
            kinds(src),
            vec![
                (2, ParseErrorKind::DuplicateId),
                (3, ParseErrorKind::UnknownCategory),
                (4, ParseErrorKind::UnknownSubcategory),
                (5, ParseErrorKind::BadIndent),
                (6, ParseErrorKind::BadIndent),
                (7, ParseErrorKind::Syntax),
                (8, ParseErrorKind::UnknownNotation),
                (10, ParseErrorKind::UnknownRelation),
                (11, ParseErrorKind::SelfEdge),
                (12, ParseErrorKind::DanglingEndpoint),
                (13, ParseErrorKind::Syntax),
            ]
        );
    }

    #[test]
    fn document_must_come_first() {
        assert_eq!(
            kinds("[a] goal :: x\n@document \"late\"\n"),
            vec![(2, ParseErrorKind::Syntax)]
        );
    }

    #[test]
    fn unclosed_block() {
        assert_eq!(kinds("@relations\n"), vec![(1, ParseErrorKind::Syntax)]);
    }

    #[test]
    fn declared_notation_is_accepted() {
        let d = parse("@notations sketch\n[a] goal sketch :: x\n").unwrap();
        assert_eq!(d.roots[0].notation.as_str(), "sketch");
    }

    #[test]
    fn skipped_level_is_bad_indent() {
        assert_eq!(
            kinds("[a] goal :: x\n    [b] goal :: y\n"),
            vec![(2, ParseErrorKind::BadIndent)]
        );
    }

    #[test]
    fn deterministic_errors() {
        let src = "[x] nope :: a\n[y] nope :: b\n@relations\nx FOO y\n@end\n";
        assert_eq!(parse(src), parse(src));
    }
}
