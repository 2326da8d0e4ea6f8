#![allow(dead_code)]

use std::path::Path;
use std::process::{Command, Output};

pub fn reqtax(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_reqtax"))
        .args(args)
        .output()
        .expect("spawn reqtax")
}

pub fn reqtax_on(args: &[&str], files: &[&Path]) -> Output {
    let mut all: Vec<&str> = args.to_vec();
    all.extend(files.iter().map(|p| p.to_str().unwrap()));
    reqtax(&all)
}

pub fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 stdout")
}

pub fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

pub fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

pub fn corpus_path() -> &'static Path {
    Path::new(concat!(env!("CARGO_MANIFEST_DIR"), "/../../corpus/sbe.srs"))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DotEdge {
    pub from: String,
    pub to: String,
    pub attrs: Vec<(String, String)>,
}

impl DotEdge {
    pub fn attr(&self, key: &str) -> Option<&str> {
        self.attrs.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }
}

#[derive(Debug, Default)]
pub struct DotGraph {
    pub name: String,
    pub nodes: Vec<(String, Vec<(String, String)>)>,
    pub edges: Vec<DotEdge>,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Id(String),
    Punct(&'static str),
}

fn lex_dot(src: &str) -> Result<Vec<Tok>, String> {
    let chars: Vec<char> = src.chars().collect();
    let mut i = 0;
    let mut out = Vec::new();
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c == '"' {
            let mut s = String::new();
            i += 1;
            loop {
                match chars.get(i) {
                    None => return Err("unterminated string".into()),
                    Some('"') => break,
                    Some('\\') => {
                        match chars.get(i + 1) {
                            Some('"') => s.push('"'),
                            Some(&other) => {
                                s.push('\\');
                                s.push(other);
                            }
                            None => return Err("dangling escape".into()),
                        }
                        i += 2;
                    }
                    Some('\n') => return Err("raw newline in string".into()),
                    Some(&ch) => {
                        s.push(ch);
                        i += 1;
                    }
                }
            }
            i += 1;
            out.push(Tok::Id(s));
        } else if c == '-' && chars.get(i + 1) == Some(&'>') {
            out.push(Tok::Punct("->"));
            i += 2;
        } else if let Some(p) = ["{", "}", "[", "]", "=", ";", ","].iter().find(|p| p.starts_with(c)) {
            out.push(Tok::Punct(p));
            i += 1;
        } else if c.is_ascii_alphanumeric() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Tok::Id(chars[start..i].iter().collect()));
        } else {
            return Err(format!("unexpected character {c:?}"));
        }
    }
    Ok(out)
}

/// Parses the subset of the DOT grammar a directed graph export needs:
/// `digraph ID { stmt* }` with node, edge and `node [...]` statements.
pub fn parse_dot(src: &str) -> Result<DotGraph, String> {
    let toks = lex_dot(src)?;
    let mut pos = 0;
    let next = |pos: &mut usize| -> Result<Tok, String> {
        let t = toks.get(*pos).cloned().ok_or("unexpected end of input")?;
        *pos += 1;
        Ok(t)
    };
    let expect = |pos: &mut usize, p: &'static str| -> Result<(), String> {
        match toks.get(*pos) {
            Some(Tok::Punct(q)) if *q == p => {
                *pos += 1;
                Ok(())
            }
            other => Err(format!("expected `{p}`, found {other:?}")),
        }
    };
    let attr_list = |pos: &mut usize| -> Result<Vec<(String, String)>, String> {
        let mut attrs = Vec::new();
        if toks.get(*pos) != Some(&Tok::Punct("[")) {
            return Ok(attrs);
        }
        *pos += 1;
        loop {
            match next(pos)? {
                Tok::Punct("]") => return Ok(attrs),
                Tok::Id(k) => {
                    expect(pos, "=")?;
                    let Tok::Id(v) = next(pos)? else {
                        return Err(format!("attribute {k} has no value"));
                    };
                    attrs.push((k, v));
                    if matches!(toks.get(*pos), Some(Tok::Punct(",")) | Some(Tok::Punct(";"))) {
                        *pos += 1;
                    }
                }
                t => return Err(format!("bad attribute list at {t:?}")),
            }
        }
    };

    let mut g = DotGraph::default();
    if next(&mut pos)? != Tok::Id("digraph".into()) {
        return Err("graph must be a digraph".into());
    }
    if let Some(Tok::Id(name)) = toks.get(pos) {
        g.name = name.clone();
        pos += 1;
    }
    expect(&mut pos, "{")?;
    loop {
        match next(&mut pos)? {
            Tok::Punct("}") => break,
            Tok::Punct(";") => {}
            Tok::Id(id) if id == "node" || id == "edge" || id == "graph" => {
                attr_list(&mut pos)?;
            }
            Tok::Id(id) => {
                if toks.get(pos) == Some(&Tok::Punct("->")) {
                    pos += 1;
                    let Tok::Id(to) = next(&mut pos)? else {
                        return Err(format!("edge from {id} has no target"));
                    };
                    let attrs = attr_list(&mut pos)?;
                    g.edges.push(DotEdge { from: id, to, attrs });
                } else {
                    let attrs = attr_list(&mut pos)?;
                    g.nodes.push((id, attrs));
                }
            }
            t => return Err(format!("unexpected {t:?}")),
        }
    }
    if pos != toks.len() {
        return Err("trailing tokens after graph".into());
    }
    Ok(g)
}
