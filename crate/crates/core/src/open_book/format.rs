//! Line-oriented text format for open books.
//!
//! ```text
//! page 1 2
//! curve a 1 0 0
//! curve b 0 1 0
//! pair a b 1
//! twist a +
//! twist b +
//! ```
//!
//! Besides `page`, `curve`, `pair` and `twist`, the following lines are
//! understood: `form i j v` (pairing of basis vectors, replacing the
//! standard form), `kind name k`, `arc name f…`, `disjoint a b`,
//! `layout name…`, `region name start end` and `marker name`. `pair` lines
//! are checked against the form. `#` starts a comment.

use std::fmt::Write as _;

use super::book::{AbstractOpenBook, Region};
use super::page::{CurveKind, PageSurface};
use super::word::{Sign, Twist, TwistWord};
use crate::error::{Error, Result};

pub fn serialize_book(b: &AbstractOpenBook) -> String {
    let mut s = String::new();
    let page = &b.page;
    writeln!(s, "page {} {}", page.genus, page.boundary_count).unwrap();
    let standard = PageSurface::standard(page.genus, page.boundary_count).ok();
    if standard.as_ref().map(|p| p.form()) != Some(page.form()) {
        for (i, row) in page.form().iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if i < j && *v != 0 {
                    writeln!(s, "form {i} {j} {v}").unwrap();
                }
            }
        }
    }
    for c in page.curves() {
        write!(s, "curve {}", c.name).unwrap();
        for x in &c.class {
            write!(s, " {x}").unwrap();
        }
        s.push('\n');
        if c.kind != CurveKind::Interior {
            writeln!(s, "kind {} {}", c.name, c.kind.as_str()).unwrap();
        }
    }
    let table = page.pairing_table();
    let cs = page.curves();
    for (x, row) in table.iter().enumerate() {
        for (y, v) in row.iter().enumerate() {
            if x < y && *v != 0 {
                writeln!(s, "pair {} {} {v}", cs[x].name, cs[y].name).unwrap();
            }
        }
    }
    for (a, c) in page.disjoint_pairs() {
        writeln!(s, "disjoint {a} {c}").unwrap();
    }
    for a in page.arcs() {
        write!(s, "arc {}", a.name).unwrap();
        for x in &a.functional {
            write!(s, " {x}").unwrap();
        }
        s.push('\n');
    }
    if !b.layout.is_empty() {
        writeln!(s, "layout {}", b.layout.join(" ")).unwrap();
    }
    for r in &b.regions {
        writeln!(s, "region {} {} {}", r.name, r.start, r.end).unwrap();
    }
    if let Some(m) = &b.marker {
        writeln!(s, "marker {m}").unwrap();
    }
    for t in b.word.twists() {
        writeln!(s, "twist {} {}", t.curve, t.sign.symbol()).unwrap();
    }
    s
}

pub fn parse_book(text: &str) -> Result<AbstractOpenBook> {
    let mut header: Option<(usize, usize)> = None;
    let mut form: Option<Vec<Vec<i64>>> = None;
    let mut curves: Vec<(String, Vec<i64>)> = Vec::new();
    let mut kinds: Vec<(usize, String, CurveKind)> = Vec::new();
    let mut pairs: Vec<(usize, String, String, i64)> = Vec::new();
    let mut disjoint: Vec<(usize, String, String)> = Vec::new();
    let mut arcs: Vec<(String, Vec<i64>)> = Vec::new();
    let mut layout = Vec::new();
    let mut regions = Vec::new();
    let mut marker = None;
    let mut word = TwistWord::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let err = |msg: String| Error::Parse { line: line_no, msg };
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        let ints = |xs: &[&str]| -> Result<Vec<i64>> {
            xs.iter().map(|t| t.parse::<i64>().map_err(|_| err(format!("`{t}` is not an integer")))).collect()
        };
        let uint = |t: &str| t.parse::<usize>().map_err(|_| err(format!("`{t}` is not a non-negative integer")));
        let need = |n: usize| if toks.len() == n { Ok(()) } else { Err(err(format!("`{}` takes {} fields", toks[0], n - 1))) };
        if toks[0] != "page" && header.is_none() {
            return Err(err("the first line must be `page g b`".into()));
        }
        match toks[0] {
            "page" => {
                need(3)?;
                if header.is_some() {
                    return Err(err("duplicate `page` line".into()));
                }
                let (g, b) = (uint(toks[1])?, uint(toks[2])?);
                if b == 0 {
                    return Err(err("a page needs at least one boundary component".into()));
                }
                header = Some((g, b));
            }
            "form" => {
                need(4)?;
                let (g, b) = header.unwrap();
                let d = 2 * g + b - 1;
                let (i, j, v) = (uint(toks[1])?, uint(toks[2])?, ints(&toks[3..4])?[0]);
                if i >= d || j >= d || i == j {
                    return Err(err(format!("form entry ({i}, {j}) is out of range")));
                }
                let f = form.get_or_insert_with(|| vec![vec![0; d]; d]);
                f[i][j] = v;
                f[j][i] = -v;
            }
            "curve" => {
                if toks.len() < 2 {
                    return Err(err("`curve` needs a name".into()));
                }
                curves.push((toks[1].to_string(), ints(&toks[2..])?));
            }
            "kind" => {
                need(3)?;
                let k = CurveKind::parse(toks[2]).ok_or_else(|| err(format!("unknown kind `{}`", toks[2])))?;
                kinds.push((line_no, toks[1].to_string(), k));
            }
            "pair" => {
                need(4)?;
                pairs.push((line_no, toks[1].to_string(), toks[2].to_string(), ints(&toks[3..4])?[0]));
            }
            "disjoint" => {
                need(3)?;
                disjoint.push((line_no, toks[1].to_string(), toks[2].to_string()));
            }
            "arc" => {
                if toks.len() < 2 {
                    return Err(err("`arc` needs a name".into()));
                }
                arcs.push((toks[1].to_string(), ints(&toks[2..])?));
            }
            "layout" => layout.extend(toks[1..].iter().map(|t| t.to_string())),
            "region" => {
                need(4)?;
                regions.push(Region { name: toks[1].to_string(), start: uint(toks[2])?, end: uint(toks[3])? });
            }
            "marker" => {
                need(2)?;
                marker = Some(toks[1].to_string());
            }
            "twist" => {
                need(3)?;
                let sign = Sign::parse(toks[2]).ok_or_else(|| err(format!("bad sign `{}`", toks[2])))?;
                word.push(Twist::new(toks[1], sign));
            }
            other => return Err(err(format!("unknown keyword `{other}`"))),
        }
    }

    let (g, b) = header.ok_or(Error::Parse { line: 0, msg: "empty open book".into() })?;
    let mut page = match form {
        Some(f) => {
            let p = PageSurface::from_form(f)?;
            if (p.genus, p.boundary_count) != (g, b) {
                return Err(Error::Inconsistent(format!(
                    "form describes genus {} with {} boundary components",
                    p.genus, p.boundary_count
                )));
            }
            p
        }
        None => PageSurface::standard(g, b)?,
    };
    let kind_of = |name: &str| kinds.iter().rev().find(|k| k.1 == name).map(|k| k.2).unwrap_or(CurveKind::Interior);
    for (name, class) in &curves {
        page.add_curve(name, class.clone(), kind_of(name))?;
    }
    for (line, name, _) in &kinds {
        if !page.has_curve(name) {
            return Err(Error::Parse { line: *line, msg: format!("`kind` for unknown curve `{name}`") });
        }
    }
    for (line, a, c, v) in &pairs {
        let actual = page.curve_pairing(a, c)?;
        if actual != *v {
            return Err(Error::Parse { line: *line, msg: format!("<{a}, {c}> is {actual}, not {v}") });
        }
    }
    for (_, a, c) in &disjoint {
        page.declare_disjoint(a, c)?;
    }
    for (name, f) in &arcs {
        page.add_arc(name, f.clone())?;
    }
    let book = AbstractOpenBook { page, word, layout, regions, marker };
    book.validate()?;
    Ok(book)
}
