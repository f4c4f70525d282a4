//! Line-oriented script language: bindings for rings, ideals, complexes,
//! chain maps and witnesses, followed by commands.

use std::collections::BTreeMap;

use thickgen::generation::witness::principal_power_witness;
use thickgen::{BuildWitness, ChainMap, Field, FreeComplex, Ideal, Matrix, MonomialOrder, Ring, RingElem};

use crate::CliError;

#[derive(Clone, Debug)]
pub enum Value {
    Ring(Ring),
    Ideal(Ideal),
    Complex(FreeComplex),
    Map(ChainMap),
    Witness(BuildWitness),
}

impl Value {
    fn kind(&self) -> &'static str {
        match self {
            Value::Ring(_) => "a ring",
            Value::Ideal(_) => "an ideal",
            Value::Complex(_) => "a complex",
            Value::Map(_) => "a chain map",
            Value::Witness(_) => "a witness",
        }
    }
}

/// A command line, split into words, with the column of each word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Command {
    pub line: usize,
    pub words: Vec<(usize, String)>,
}

impl Command {
    pub fn parse(line: usize, text: &str) -> Self {
        let mut words = Vec::new();
        let mut start = None;
        for (i, c) in text.char_indices().chain(std::iter::once((text.len(), ' '))) {
            match (c.is_whitespace(), start) {
                (true, Some(s)) => {
                    words.push((s + 1, text[s..i].to_string()));
                    start = None;
                }
                (false, None) => start = Some(i),
                _ => {}
            }
        }
        Self { line, words }
    }

    pub fn text(&self) -> String {
        self.words.iter().map(|(_, w)| w.as_str()).collect::<Vec<_>>().join(" ")
    }
}

#[derive(Clone, Debug, Default)]
pub struct Session {
    bindings: BTreeMap<String, Value>,
    last_ring: Option<Ring>,
    pub commands: Vec<Command>,
}

impl Session {
    pub fn get(&self, name: &str) -> Option<&Value> {
        self.bindings.get(name)
    }

    pub fn names(&self) -> impl Iterator<Item = &String> {
        self.bindings.keys()
    }

    pub fn last_ring(&self) -> Option<&Ring> {
        self.last_ring.as_ref()
    }

    fn bind(&mut self, name: Span, v: Value) -> Result<(), CliError> {
        if self.bindings.contains_key(name.text) {
            return Err(name.error(format!("{} is already defined", name.text)));
        }
        if let Value::Ring(r) = &v {
            self.last_ring = Some(r.clone());
        }
        self.bindings.insert(name.text.to_string(), v);
        Ok(())
    }

    fn lookup(&self, name: Span) -> Result<&Value, CliError> {
        self.bindings.get(name.text).ok_or_else(|| name.error(format!("unknown name {}", name.text)))
    }

    fn ring(&self, name: Span) -> Result<Ring, CliError> {
        match self.lookup(name)? {
            Value::Ring(r) => Ok(r.clone()),
            v => Err(name.error(format!("{} is {}, expected a ring", name.text, v.kind()))),
        }
    }

    fn complex(&self, name: Span) -> Result<FreeComplex, CliError> {
        match self.lookup(name)? {
            Value::Complex(x) => Ok(x.clone()),
            v => Err(name.error(format!("{} is {}, expected a complex", name.text, v.kind()))),
        }
    }
}

/// A piece of a statement together with its position in the source.
#[derive(Clone, Copy, Debug)]
struct Span<'a> {
    text: &'a str,
    offset: usize,
    map: &'a [Anchor],
}

impl<'a> Span<'a> {
    fn pos(&self) -> (usize, usize) {
        let &(start, line, col) = self.map.iter().rev().find(|(o, _, _)| *o <= self.offset).unwrap_or(&self.map[0]);
        (line, col + (self.offset - start))
    }

    fn error(&self, msg: impl Into<String>) -> CliError {
        let (line, col) = self.pos();
        CliError::Syntax { line, col, msg: msg.into() }
    }

    fn definition(&self, e: thickgen::Error) -> CliError {
        CliError::Definition { line: self.pos().0, source: e }
    }

    fn sub(&self, start: usize, end: usize) -> Span<'a> {
        Span { text: &self.text[start..end], offset: self.offset + start, map: self.map }
    }

    fn trim(&self) -> Span<'a> {
        let lead = self.text.len() - self.text.trim_start().len();
        let end = self.text.trim_end().len();
        if lead >= end {
            return self.sub(self.text.len(), self.text.len());
        }
        self.sub(lead, end)
    }

    fn is_empty(&self) -> bool {
        self.text.is_empty()
    }

    /// First whitespace-delimited word and the rest.
    fn word(&self) -> (Span<'a>, Span<'a>) {
        let t = self.trim();
        let end = t.text.find(char::is_whitespace).unwrap_or(t.text.len());
        (t.sub(0, end), t.sub(end, t.text.len()).trim())
    }

    fn expect_word(&self, w: &str) -> Result<Span<'a>, CliError> {
        let (head, rest) = self.word();
        if head.text == w {
            Ok(rest)
        } else {
            Err(head.error(format!("expected '{w}', found '{}'", head.text)))
        }
    }

    /// Splits at the first top-level occurrence of `sep`.
    fn split_once(&self, sep: &str) -> Option<(Span<'a>, Span<'a>)> {
        let i = top_level_find(self.text, sep)?;
        Some((self.sub(0, i).trim(), self.sub(i + sep.len(), self.text.len()).trim()))
    }

    /// Splits on every top-level occurrence of `sep`.
    fn split_all(&self, sep: char) -> Vec<Span<'a>> {
        let mut out = Vec::new();
        let mut depth = 0i32;
        let mut start = 0;
        for (i, c) in self.text.char_indices() {
            match c {
                '(' | '[' | '{' => depth += 1,
                ')' | ']' | '}' => depth -= 1,
                c if c == sep && depth == 0 => {
                    out.push(self.sub(start, i).trim());
                    start = i + c.len_utf8();
                }
                _ => {}
            }
        }
        out.push(self.sub(start, self.text.len()).trim());
        out
    }

    /// Contents of a bracketed span `open … close`.
    fn inside(&self, open: char, close: char) -> Result<Span<'a>, CliError> {
        let t = self.trim();
        if !t.text.starts_with(open) {
            return Err(t.error(format!("expected '{open}'")));
        }
        if !t.text.ends_with(close) || t.text.len() < 2 {
            return Err(t.sub(t.text.len().saturating_sub(1), t.text.len()).error(format!("expected '{close}'")));
        }
        Ok(t.sub(open.len_utf8(), t.text.len() - close.len_utf8()).trim())
    }

    fn int<T: std::str::FromStr>(&self, what: &str) -> Result<T, CliError> {
        self.text.trim().parse().map_err(|_| self.error(format!("expected {what}, found '{}'", self.text)))
    }

    fn elem(&self, ring: &Ring) -> Result<RingElem, CliError> {
        if self.is_empty() {
            return Err(self.error("expected a ring element"));
        }
        ring.parse_elem(self.text).map_err(|e| self.error(e.to_string()))
    }
}

fn top_level_find(text: &str, sep: &str) -> Option<usize> {
    let mut depth = 0i32;
    for (i, c) in text.char_indices() {
        if depth == 0 && text[i..].starts_with(sep) {
            return Some(i);
        }
        match c {
            '(' | '[' | '{' => depth += 1,
            ')' | ']' | '}' => depth -= 1,
            _ => {}
        }
    }
    None
}

/// Parses a whole script: bindings are evaluated eagerly, commands are collected.
pub fn parse_script(text: &str) -> Result<Session, CliError> {
    let mut session = Session::default();
    for (stmt, map) in statements(text)? {
        let span = Span { text: &stmt, offset: 0, map: &map };
        let (head, rest) = span.word();
        match head.text {
            "ring" => {
                let (name, desc) = rest.split_once("=").ok_or_else(|| rest.error("expected 'ring NAME = DESCRIPTION'"))?;
                let ring = parse_ring(desc)?;
                session.bind(name, Value::Ring(ring))?;
            }
            "ideal" => {
                let (lhs, body) = rest.split_once("=").ok_or_else(|| rest.error("expected 'ideal NAME over RING = (…)'"))?;
                let (name, r) = lhs.word();
                let ring = session.ring(r.expect_word("over")?.trim())?;
                let gens = body
                    .inside('(', ')')?
                    .split_all(',')
                    .iter()
                    .map(|g| g.elem(&ring))
                    .collect::<Result<Vec<_>, _>>()?;
                let ideal = Ideal::new(&ring, gens).map_err(|e| body.definition(e))?;
                session.bind(name, Value::Ideal(ideal))?;
            }
            "complex" => {
                let (lhs, body) = rest.split_once("=").ok_or_else(|| rest.error("expected 'complex NAME over RING = { … }'"))?;
                let (name, r) = lhs.word();
                let ring = session.ring(r.expect_word("over")?.trim())?;
                let x = parse_complex(&ring, body)?;
                session.bind(name, Value::Complex(x))?;
            }
            "map" => {
                let (lhs, body) = rest.split_once("=").ok_or_else(|| rest.error("expected 'map NAME : X -> Y = { … }'"))?;
                let (name, sig) = lhs.split_once(":").ok_or_else(|| lhs.error("expected 'NAME : X -> Y'"))?;
                let (src, dst) = sig.split_once("->").ok_or_else(|| sig.error("expected 'X -> Y'"))?;
                let (x, y) = (session.complex(src)?, session.complex(dst)?);
                let f = parse_map(&x, &y, body)?;
                session.bind(name, Value::Map(f))?;
            }
            "witness" => {
                let (lhs, body) = rest.split_once("=").ok_or_else(|| rest.error("expected 'witness NAME over RING = principal ELEM N'"))?;
                let (name, r) = lhs.word();
                let ring = session.ring(r.expect_word("over")?.trim())?;
                let args = body.expect_word("principal")?;
                let (n, elem) = match args.text.rfind(char::is_whitespace) {
                    Some(i) => (args.sub(i, args.text.len()).trim(), args.sub(0, i).trim()),
                    None => return Err(args.error("expected 'principal ELEM N'")),
                };
                let x = elem.elem(&ring)?;
                let w = principal_power_witness(&x, n.int("a positive integer")?).map_err(|e| body.definition(e))?;
                session.bind(name, Value::Witness(w))?;
            }
            _ => session.commands.push(Command::parse(head.pos().0, span.text)),
        }
    }
    Ok(session)
}

/// `(offset in statement, line, column)`.
type Anchor = (usize, usize, usize);

/// Splits the text into statements, joining lines while brackets are open.
/// Each statement carries an anchor per source line.
fn statements(text: &str) -> Result<Vec<(String, Vec<Anchor>)>, CliError> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut map = Vec::new();
    let mut depth = 0i32;
    let mut open_at = (0, 0);
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        if depth == 0 && line.trim().is_empty() {
            continue;
        }
        if depth == 0 {
            open_at = (i + 1, 1);
        } else {
            cur.push(' ');
        }
        map.push((cur.len(), i + 1, 1));
        cur.push_str(line);
        for (j, c) in line.char_indices() {
            match c {
                '(' | '[' | '{' => depth += 1,
                ')' | ']' | '}' => depth -= 1,
                _ => {}
            }
            if depth < 0 {
                return Err(CliError::Syntax { line: i + 1, col: j + 1, msg: format!("unbalanced '{c}'") });
            }
        }
        if depth == 0 {
            out.push((std::mem::take(&mut cur), std::mem::take(&mut map)));
        }
    }
    if depth > 0 {
        return Err(CliError::Syntax { line: open_at.0, col: open_at.1, msg: "unclosed bracket".into() });
    }
    Ok(out)
}

fn parse_field(s: Span) -> Result<Field, CliError> {
    let t = s.text;
    let f = match t.strip_prefix("Fp").or_else(|| t.strip_prefix('F')) {
        _ if t == "Q" => Field::Rational,
        Some(digits) => Field::Prime(s.sub(t.len() - digits.len(), t.len()).trim().int("a prime")?),
        None => return Err(s.error(format!("unknown coefficient field '{t}'"))),
    };
    if let Field::Prime(p) = f {
        Ring::prime_field(p).map_err(|e| s.error(e.to_string()))?;
    }
    Ok(f)
}

/// `Z | Zmod m | Fp p | Q | poly K [x,…] [lex|grevlex] | polyquot K [x] (f)`.
fn parse_ring(desc: Span) -> Result<Ring, CliError> {
    let (head, rest) = desc.word();
    let err = |e: thickgen::Error| desc.error(e.to_string());
    let ring = match head.text {
        "Z" if rest.is_empty() => Ring::integers(),
        "Q" if rest.is_empty() => Ring::rationals(),
        "Zmod" => Ring::int_mod(rest.int::<u64>("a modulus")?).map_err(err)?,
        "Fp" => Ring::prime_field(rest.int("a prime")?).map_err(err)?,
        "poly" | "polyquot" => {
            let bracket = rest.text.find('[').ok_or_else(|| rest.error("expected '[variables]'"))?;
            let field = parse_field(rest.sub(0, bracket).trim())?;
            let after = rest.sub(bracket, rest.text.len());
            let close = after.text.find(']').ok_or_else(|| after.error("expected ']'"))?;
            let vars: Vec<&str> = after.sub(1, close).split_all(',').iter().map(|v| v.text).collect();
            if vars.iter().any(|v| v.is_empty() || !v.chars().all(|c| c.is_alphanumeric() || c == '_')) {
                return Err(after.error("malformed variable list"));
            }
            let tail = after.sub(close + 1, after.text.len()).trim();
            if head.text == "poly" {
                match (vars.len(), tail.text) {
                    (1, "") => Ring::unipoly(field, vars[0]).map_err(err)?,
                    (_, "" | "grevlex") => Ring::multipoly(field, &vars, MonomialOrder::Grevlex).map_err(err)?,
                    (_, "lex") => Ring::multipoly(field, &vars, MonomialOrder::Lex).map_err(err)?,
                    _ => return Err(tail.error(format!("unknown monomial order '{}'", tail.text))),
                }
            } else {
                if vars.len() != 1 {
                    return Err(after.error("a quotient ring takes exactly one variable"));
                }
                let base = Ring::unipoly(field.clone(), vars[0]).map_err(err)?;
                let f = tail.inside('(', ')')?.elem(&base)?;
                let modulus = f.as_unipoly().expect("univariate element").clone();
                Ring::uniquot(field, vars[0], modulus).map_err(|e| tail.error(e.to_string()))?
            }
        }
        _ => return Err(desc.error(format!("unknown ring description '{}'", desc.text))),
    };
    Ok(ring)
}

fn parse_matrix(ring: &Ring, s: Span, label: &str) -> Result<Matrix, CliError> {
    let body = s.inside('[', ']')?;
    let rows = if body.is_empty() { Vec::new() } else { body.split_all(',') };
    let mut parsed = Vec::new();
    let mut cols = None;
    for (i, row) in rows.iter().enumerate() {
        let inner = row.inside('[', ']')?;
        let entries = if inner.is_empty() { Vec::new() } else { inner.split_all(',') };
        let es = entries.iter().map(|e| e.elem(ring)).collect::<Result<Vec<_>, _>>()?;
        match cols {
            None => cols = Some(es.len()),
            Some(c) if c != es.len() => {
                return Err(row.error(format!("{label}: row {} has {} entries, expected {c}", i + 1, es.len())));
            }
            _ => {}
        }
        parsed.push(es);
    }
    Matrix::from_rows(ring, parsed, cols.unwrap_or(0)).map_err(|e| s.error(format!("{label}: {e}")))
}

/// `LABEL(n) = MATRIX` with integer `n`.
fn indexed<'a>(item: Span<'a>, label: &str) -> Result<Option<(i64, Span<'a>)>, CliError> {
    let Some(rest) = item.text.strip_prefix(label).filter(|r| r.trim_start().starts_with('(')) else {
        return Ok(None);
    };
    let rest = item.sub(item.text.len() - rest.len(), item.text.len()).trim();
    let (idx, value) = rest.split_once("=").ok_or_else(|| rest.error("expected '='"))?;
    let n = idx.inside('(', ')')?.int("a degree")?;
    Ok(Some((n, value)))
}

/// `{ deg lo..hi ; rank(n) = k ; d(n) = [[…]] ; … }`.
fn parse_complex(ring: &Ring, body: Span) -> Result<FreeComplex, CliError> {
    let inner = body.inside('{', '}')?;
    let mut range = None;
    let mut ranks = BTreeMap::new();
    let mut diffs = BTreeMap::new();
    for item in inner.split_all(';') {
        if item.is_empty() {
            continue;
        }
        if let Some(r) = item.text.strip_prefix("deg") {
            let r = item.sub(item.text.len() - r.len(), item.text.len()).trim();
            let (lo, hi) = r.split_once("..").ok_or_else(|| r.error("expected 'lo..hi'"))?;
            let (lo, hi): (i64, i64) = (lo.int("a degree")?, hi.int("a degree")?);
            if hi < lo {
                return Err(r.error(format!("empty degree range {lo}..{hi}")));
            }
            range = Some((lo, hi));
        } else if let Some((n, v)) = indexed(item, "rank")? {
            ranks.insert(n, v.int::<usize>("a rank")?);
        } else if let Some((n, v)) = indexed(item, "d")? {
            if diffs.contains_key(&n) {
                return Err(item.error(format!("d({n}) given twice")));
            }
            diffs.insert(n, parse_matrix(ring, v, &format!("d({n})"))?);
        } else {
            return Err(item.error(format!("unexpected '{}'", item.text)));
        }
    }
    let (lo, hi) = range.ok_or_else(|| inner.error("missing 'deg lo..hi'"))?;
    for &n in ranks.keys().chain(diffs.keys()) {
        if n < lo || n > hi || (diffs.contains_key(&n) && n == hi) {
            return Err(body.error(format!("degree {n} lies outside {lo}..{hi}")));
        }
    }
    let x = if ranks.is_empty() {
        FreeComplex::from_diffs(ring, lo, hi, &diffs)
    } else {
        let mut rs = Vec::new();
        for n in lo..=hi {
            let inferred = diffs.get(&n).map(|d| d.cols()).or_else(|| diffs.get(&(n - 1)).map(|d| d.rows()));
            rs.push(match (ranks.get(&n), inferred) {
                (Some(&r), _) => r,
                (None, Some(r)) => r,
                (None, None) => 0,
            });
        }
        FreeComplex::from_ranks_and_diffs(ring, lo, rs, &diffs)
    };
    x.map_err(|e| body.definition(e))
}

/// `{ c(n) = [[…]] ; … }`.
fn parse_map(x: &FreeComplex, y: &FreeComplex, body: Span) -> Result<ChainMap, CliError> {
    let inner = body.inside('{', '}')?;
    let mut comps = BTreeMap::new();
    for item in inner.split_all(';') {
        if item.is_empty() {
            continue;
        }
        let (n, v) = indexed(item, "c")?.ok_or_else(|| item.error("expected 'c(n) = [[…]]'"))?;
        if comps.contains_key(&n) {
            return Err(item.error(format!("c({n}) given twice")));
        }
        comps.insert(n, parse_matrix(x.ring(), v, &format!("c({n})"))?);
    }
    ChainMap::new(x, y, comps).map_err(|e| body.definition(e))
}

/// Resolves a name to a value of the expected shape, for commands.
pub(crate) fn resolve<'s>(session: &'s Session, cmd: &Command, idx: usize) -> Result<(&'s Value, &'s str), CliError> {
    let (col, name) = cmd
        .words
        .get(idx)
        .ok_or_else(|| CliError::Syntax { line: cmd.line, col: 1, msg: format!("'{}' is missing an argument", cmd.text()) })?;
    let (key, v) = session
        .bindings
        .get_key_value(name.as_str())
        .ok_or_else(|| CliError::Syntax { line: cmd.line, col: *col, msg: format!("unknown name {name}") })?;
    Ok((v, key.as_str()))
}

/// Parses an element of `ring` given as a command word.
pub(crate) fn command_elem(ring: &Ring, cmd: &Command, idx: usize) -> Result<RingElem, CliError> {
    let (col, text) = &cmd.words[idx];
    ring.parse_elem(text).map_err(|e| CliError::Syntax { line: cmd.line, col: *col, msg: e.to_string() })
}

pub(crate) fn kind_error(cmd: &Command, idx: usize, v: &Value, expected: &str) -> CliError {
    let (col, name) = &cmd.words[idx];
    CliError::Syntax { line: cmd.line, col: *col, msg: format!("{name} is {}, expected {expected}", v.kind()) }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_bindings() {
        let s = parse_script("ring R = Z\nideal I over R = (6)\n").unwrap();
        assert_eq!(s.names().count(), 2);
        assert!(s.commands.is_empty());
    }

    #[test]
    fn complex_block() {
        let s = parse_script("ring R = Z\ncomplex X over R = { deg -1..0 ; d(-1) = [[2]] }").unwrap();
        let Some(Value::Complex(x)) = s.get("X") else { panic!() };
        let z = Ring::integers();
        assert_eq!(x, &FreeComplex::two_term(&z.from_int(2)));
    }

    #[test]
    fn ragged_rows_name_the_degree() {
        let e = parse_script("ring R = Z\ncomplex X over R = { deg -1..0 ; d(-1) = [[2, 1], [3]] }").unwrap_err();
        assert!(e.to_string().contains("d(-1)"), "{e}");
        assert_eq!(e.exit_code(), 1);
    }

    #[test]
    fn redefinition_is_rejected() {
        let e = parse_script("ring R = Z\nring R = Q").unwrap_err();
        assert!(e.to_string().contains("already defined"));
    }

    #[test]
    fn not_a_complex_names_the_degree() {
        let e = parse_script("ring R = Z\ncomplex X over R = { deg -2..0 ; d(-2) = [[1]] ; d(-1) = [[1]] }").unwrap_err();
        assert!(e.to_string().contains("degree -2"), "{e}");
    }

    #[test]
    fn ring_descriptions() {
        for d in ["Z", "Zmod 12", "Fp 5", "Q", "poly Q [x,y] grevlex", "poly Q [x, y] lex", "poly F3 [t]", "polyquot F2 [x] (x^2+x+1)"] {
            let s = parse_script(&format!("ring R = {d}")).unwrap();
            assert!(matches!(s.get("R"), Some(Value::Ring(_))), "{d}");
        }
        assert!(parse_script("ring R = Zmod 0").is_err());
        assert!(parse_script("ring R = Fp 6").is_err());
        assert!(parse_script("ring R = poly Q [x] (x)").is_err());
    }

    #[test]
    fn multi_line_complex_and_columns() {
        let s = parse_script("ring R = Z\ncomplex X over R = {\n  deg 0..1 ;\n  d(0) = [[1], [2]]\n}\nhomology X").unwrap();
        assert_eq!(s.commands.len(), 1);
        assert_eq!(s.commands[0].line, 6);
        let e = parse_script("ring R = Z\nideal I over R = (2, y)").unwrap_err();
        match e {
            CliError::Syntax { line, col, .. } => assert_eq!((line, col), (2, 22)),
            other => panic!("{other}"),
        }
    }
}
