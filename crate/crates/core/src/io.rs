//! JSON file formats for every artifact.
//!
//! Indices in files are 1-based and rationals are strings `"p/q"` (integers
//! may also be bare JSON numbers). Nested artifacts are either inline objects
//! or paths relative to the referencing file.

use std::path::{Path, PathBuf};

use json_spanned_value::spanned;
use json_spanned_value::Value as SValue;
use num_traits::Zero;
use serde_json::{json, Map, Value};

use crate::bialgebra::{Cobracket, MatchedPairData};
use crate::error::{Error, Result};
use crate::exactlin::{fmt_rat, parse_rat, Mat, Rat, Tensor4};
use crate::homlie::Algebra3;
use crate::prelie::{OOperator, PreLie3, PreLieRep};
use crate::reps::Rep3;
use crate::symplectic::{BilForm, FormKind};
use crate::yangbaxter::RTensor;
use crate::MAX_DIM;

/// An artifact with a canonical JSON encoding.
pub trait Artifact: Sized {
    fn decode(node: &Node) -> Result<Self>;
    fn encode(&self) -> Value;
}

struct Doc {
    file: String,
    text: String,
    dir: PathBuf,
}

/// A located JSON value inside a parsed file.
pub struct Node<'a> {
    doc: &'a Doc,
    value: &'a spanned::Value,
    field: String,
}

impl<'a> Node<'a> {
    fn line(&self) -> usize {
        line_of(&self.doc.text, self.value.start())
    }

    pub fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            file: self.doc.file.clone(),
            line: self.line(),
            field: if self.field.is_empty() { "<root>".into() } else { self.field.clone() },
            message: message.into(),
        }
    }

    fn child(&self, value: &'a spanned::Value, field: String) -> Node<'a> {
        Node { doc: self.doc, value, field }
    }

    fn path(&self, key: &str) -> String {
        if self.field.is_empty() {
            key.to_string()
        } else {
            format!("{}.{key}", self.field)
        }
    }

    pub fn opt(&self, key: &str) -> Result<Option<Node<'a>>> {
        match self.value.get_ref() {
            SValue::Object(map) => Ok(map.get(key).map(|v| self.child(v, self.path(key)))),
            other => Err(self.error(format!("expected an object, found {}", other.type_str()))),
        }
    }

    pub fn get(&self, key: &str) -> Result<Node<'a>> {
        self.opt(key)?.ok_or_else(|| Node { field: self.path(key), ..*self }.error("missing field"))
    }

    pub fn items(&self) -> Result<Vec<Node<'a>>> {
        match self.value.get_ref() {
            SValue::Array(items) => {
                Ok(items.iter().enumerate().map(|(i, v)| self.child(v, format!("{}[{i}]", self.field))).collect())
            }
            other => Err(self.error(format!("expected an array, found {}", other.type_str()))),
        }
    }

    pub fn usize(&self) -> Result<usize> {
        match self.value.get_ref() {
            SValue::Number(n) => n
                .as_u64()
                .and_then(|v| usize::try_from(v).ok())
                .ok_or_else(|| self.error(format!("expected a non-negative integer, found {n}"))),
            other => Err(self.error(format!("expected an integer, found {}", other.type_str()))),
        }
    }

    /// A 1-based index in `1..=bound`, returned 0-based.
    pub fn index(&self, bound: usize) -> Result<usize> {
        let v = self.usize()?;
        if v == 0 || v > bound {
            return Err(self.error(format!("index {v} outside 1..={bound}")));
        }
        Ok(v - 1)
    }

    pub fn str(&self) -> Result<&'a str> {
        match self.value.get_ref() {
            SValue::String(s) => Ok(s.as_str()),
            other => Err(self.error(format!("expected a string, found {}", other.type_str()))),
        }
    }

    pub fn rat(&self) -> Result<Rat> {
        match self.value.get_ref() {
            SValue::String(s) => parse_rat(s).ok_or_else(|| self.error(format!("`{s}` is not a rational p/q"))),
            SValue::Number(n) => n
                .as_i64()
                .map(crate::exactlin::int)
                .ok_or_else(|| self.error(format!("{n} is not an integer; write fractions as \"p/q\""))),
            other => Err(self.error(format!("expected a rational, found {}", other.type_str()))),
        }
    }

    /// Row-major matrix with the given shape.
    pub fn matrix(&self, rows: usize, cols: usize) -> Result<Mat> {
        let items = self.items()?;
        if items.len() != rows {
            return Err(self.error(format!("expected {rows} rows, found {}", items.len())));
        }
        let mut m = Mat::zeros(rows, cols);
        for (i, row) in items.iter().enumerate() {
            let cells = row.items()?;
            if cells.len() != cols {
                return Err(row.error(format!("expected {cols} entries, found {}", cells.len())));
            }
            for (j, c) in cells.iter().enumerate() {
                m[(i, j)] = c.rat()?;
            }
        }
        Ok(m)
    }

    /// Square matrix whose size is read from the data.
    pub fn square_matrix(&self) -> Result<Mat> {
        let n = self.items()?.len();
        if n == 0 {
            return Err(self.error("empty matrix"));
        }
        self.matrix(n, n)
    }

    fn dim(&self) -> Result<usize> {
        let n = self.usize()?;
        if n == 0 {
            return Err(self.error("dimension must be positive"));
        }
        if n > MAX_DIM {
            return Err(self.error(format!("dimension {n} exceeds the supported maximum of {MAX_DIM}")));
        }
        Ok(n)
    }

    /// An inline artifact or a path to one, relative to this file.
    pub fn artifact<T: Artifact>(&self) -> Result<T> {
        match self.value.get_ref() {
            SValue::String(s) => load(&self.doc.dir.join(s)),
            SValue::Object(_) => T::decode(self),
            other => Err(self.error(format!("expected an object or a file path, found {}", other.type_str()))),
        }
    }
}

fn line_of(text: &str, offset: usize) -> usize {
    text.as_bytes()[..offset.min(text.len())].iter().filter(|&&b| b == b'\n').count() + 1
}

/// Parses `text` as a `T`; `origin` names the file in error messages and
/// anchors relative references.
pub fn parse<T: Artifact>(text: &str, origin: &Path) -> Result<T> {
    let doc = Doc {
        file: origin.display().to_string(),
        text: text.to_string(),
        dir: origin.parent().map(Path::to_path_buf).unwrap_or_default(),
    };
    let value: spanned::Value = json_spanned_value::from_str(&doc.text).map_err(|e| Error::Parse {
        file: doc.file.clone(),
        line: e.line(),
        field: "<syntax>".into(),
        message: e.to_string(),
    })?;
    T::decode(&Node { doc: &doc, value: &value, field: String::new() })
}

pub fn load<T: Artifact>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse { file: path.display().to_string(), line: 0, field: "<file>".into(), message: e.to_string() })?;
    parse(&text, path)
}

/// Canonical text: objects one key per line, arrays on one line when short.
pub fn to_text<T: Artifact>(a: &T) -> String {
    let mut out = String::new();
    render(&a.encode(), 0, &mut out);
    out.push('\n');
    out
}

pub fn save<T: Artifact>(a: &T, path: &Path) -> Result<()> {
    write_atomic(path, &to_text(a))
}

/// Writes through a temporary file in the same directory and renames.
pub fn write_atomic(path: &Path, text: &str) -> Result<()> {
    let tmp = path.with_extension(format!(
        "{}.tmp",
        path.extension().and_then(|e| e.to_str()).unwrap_or("out")
    ));
    std::fs::write(&tmp, text)?;
    std::fs::rename(&tmp, path)?;
    Ok(())
}

const LINE_WIDTH: usize = 100;

pub fn render(v: &Value, indent: usize, out: &mut String) {
    let compact = compact(v);
    let fits = indent + compact.len() <= LINE_WIDTH;
    match v {
        Value::Object(map) if !map.is_empty() && (!fits || map.values().any(|x| x.is_object())) => {
            out.push_str("{\n");
            let len = map.len();
            for (i, (k, x)) in map.iter().enumerate() {
                push_indent(out, indent + 2);
                out.push_str(&serde_json::to_string(k).expect("string"));
                out.push_str(": ");
                render(x, indent + 2, out);
                if i + 1 < len {
                    out.push(',');
                }
                out.push('\n');
            }
            push_indent(out, indent);
            out.push('}');
        }
        Value::Array(items) if !items.is_empty() && !fits => {
            out.push_str("[\n");
            for (i, x) in items.iter().enumerate() {
                push_indent(out, indent + 2);
                render(x, indent + 2, out);
                if i + 1 < items.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            push_indent(out, indent);
            out.push(']');
        }
        _ => out.push_str(&compact),
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::Array(items) => format!("[{}]", items.iter().map(compact).collect::<Vec<_>>().join(", ")),
        Value::Object(map) => format!(
            "{{{}}}",
            map.iter()
                .map(|(k, x)| format!("{}: {}", serde_json::to_string(k).expect("string"), compact(x)))
                .collect::<Vec<_>>()
                .join(", ")
        ),
        scalar => serde_json::to_string(scalar).expect("scalar"),
    }
}

fn push_indent(out: &mut String, n: usize) {
    out.extend(std::iter::repeat_n(' ', n));
}

fn rat_json(r: &Rat) -> Value {
    Value::String(fmt_rat(r))
}

fn mat_json(m: &Mat) -> Value {
    Value::Array((0..m.rows()).map(|i| Value::Array(m.row(i).iter().map(rat_json).collect())).collect())
}

fn object(pairs: Vec<(&str, Value)>) -> Value {
    let mut m = Map::new();
    for (k, v) in pairs {
        m.insert(k.to_string(), v);
    }
    Value::Object(m)
}

fn wrap<T>(node: &Node, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::Parse { .. } | Error::Io(_) => e,
        other => node.error(other.to_string()),
    })
}

impl Artifact for Algebra3 {
    fn decode(node: &Node) -> Result<Self> {
        let n = node.get("dim")?.dim()?;
        let twist = match node.opt("twist")? {
            Some(t) => t.matrix(n, n)?,
            None => Mat::identity(n),
        };
        let mut t = Tensor4::cube(n);
        let mut seen = std::collections::BTreeSet::new();
        for row in node.get("bracket")?.items()? {
            let cells = row.items()?;
            if cells.len() != 5 {
                return Err(row.error(format!("expected [i, j, k, l, c], found {} entries", cells.len())));
            }
            let (i, j, k, l) = (cells[0].index(n)?, cells[1].index(n)?, cells[2].index(n)?, cells[3].index(n)?);
            let c = cells[4].rat()?;
            if i == j || j == k || i == k {
                return Err(row.error(format!("repeated index in ({}, {}, {})", i + 1, j + 1, k + 1)));
            }
            if !(i < j && j < k) {
                return Err(row.error("bracket rows must have i < j < k"));
            }
            if !seen.insert((i, j, k, l)) {
                return Err(row.error(format!("duplicate row for ({}, {}, {}) -> {}", i + 1, j + 1, k + 1, l + 1)));
            }
            for (p, s) in PERMS {
                let idx = [[i, j, k][p[0]], [i, j, k][p[1]], [i, j, k][p[2]], l];
                t.set(idx, if s > 0 { c.clone() } else { -c.clone() });
            }
        }
        let mut a = wrap(node, Algebra3::new(t, twist))?;
        if let Some(b) = node.opt("basis")? {
            let names = b.items()?.iter().map(|x| x.str().map(str::to_string)).collect::<Result<Vec<_>>>()?;
            a = wrap(&b, a.with_basis(names))?;
        }
        if let Some(l) = node.opt("label")? {
            a = a.with_label(l.str()?);
        }
        Ok(a)
    }

    fn encode(&self) -> Value {
        let n = self.dim();
        let mut rows = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    for (l, c) in self.structure(i, j, k) {
                        rows.push(json!([i + 1, j + 1, k + 1, l + 1, fmt_rat(c)]));
                    }
                }
            }
        }
        object(vec![
            ("label", Value::String(self.label().to_string())),
            ("dim", json!(n)),
            ("basis", json!(self.basis_names())),
            ("bracket", Value::Array(rows)),
            ("twist", mat_json(self.twist())),
        ])
    }
}

const PERMS: [([usize; 3], i8); 6] =
    [([0, 1, 2], 1), ([1, 2, 0], 1), ([2, 0, 1], 1), ([1, 0, 2], -1), ([0, 2, 1], -1), ([2, 1, 0], -1)];

fn pair_family(node: &Node, n: usize, m: usize, upper_only: bool) -> Result<Vec<(usize, usize, Mat)>> {
    let mut out = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for row in node.items()? {
        let cells = row.items()?;
        if cells.len() != 3 {
            return Err(row.error(format!("expected [i, j, matrix], found {} entries", cells.len())));
        }
        let (i, j) = (cells[0].index(n)?, cells[1].index(n)?);
        if upper_only && i >= j {
            return Err(row.error("rows must have i < j"));
        }
        if !seen.insert((i, j)) {
            return Err(row.error(format!("duplicate row for ({}, {})", i + 1, j + 1)));
        }
        out.push((i, j, cells[2].matrix(m, m)?));
    }
    Ok(out)
}

fn pair_json<'a>(items: impl Iterator<Item = (usize, usize, &'a Mat)>) -> Value {
    Value::Array(items.filter(|(_, _, m)| !m.is_zero()).map(|(i, j, m)| json!([i + 1, j + 1, mat_json(m)])).collect())
}

impl Artifact for Rep3 {
    fn decode(node: &Node) -> Result<Self> {
        let a: Algebra3 = node.get("algebra")?.artifact()?;
        let m = node.get("vdim")?.dim()?;
        let twist = match node.opt("A")? {
            Some(t) => t.matrix(m, m)?,
            None => Mat::identity(m),
        };
        let upper = pair_family(&node.get("rho")?, a.dim(), m, true)?;
        wrap(node, Rep3::from_upper(a, m, upper, twist))
    }

    fn encode(&self) -> Value {
        let n = self.algebra().dim();
        let upper = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).map(|(i, j)| (i, j, self.rho(i, j)));
        object(vec![
            ("algebra", self.algebra().encode()),
            ("vdim", json!(self.vdim())),
            ("rho", pair_json(upper)),
            ("A", mat_json(self.twist())),
        ])
    }
}

impl Artifact for Cobracket {
    fn decode(node: &Node) -> Result<Self> {
        let a: Algebra3 = node.get("algebra")?.artifact()?;
        let n = a.dim();
        let mut t = Tensor4::cube(n);
        let mut seen = std::collections::BTreeSet::new();
        for row in node.get("delta")?.items()? {
            let cells = row.items()?;
            if cells.len() != 5 {
                return Err(row.error(format!("expected [i, j, l, k, c], found {} entries", cells.len())));
            }
            let idx = [cells[0].index(n)?, cells[1].index(n)?, cells[2].index(n)?, cells[3].index(n)?];
            if !seen.insert(idx) {
                return Err(row.error("duplicate row"));
            }
            t.set(idx, cells[4].rat()?);
        }
        wrap(node, Cobracket::new(a, t))
    }

    fn encode(&self) -> Value {
        let n = self.base().dim();
        let mut rows = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    for k in 0..n {
                        let c = self.delta().get([i, j, l, k]);
                        if !c.is_zero() {
                            rows.push(json!([i + 1, j + 1, l + 1, k + 1, fmt_rat(c)]));
                        }
                    }
                }
            }
        }
        object(vec![("algebra", self.base().encode()), ("delta", Value::Array(rows))])
    }
}

impl Artifact for MatchedPairData {
    fn decode(node: &Node) -> Result<Self> {
        let rho: Rep3 = node.get("rho")?.artifact()?;
        let mu: Rep3 = node.get("mu")?.artifact()?;
        wrap(node, MatchedPairData::new(rho.algebra().clone(), mu.algebra().clone(), rho, mu))
    }

    fn encode(&self) -> Value {
        object(vec![("rho", self.rho.encode()), ("mu", self.mu.encode())])
    }
}

impl Artifact for PreLie3 {
    fn decode(node: &Node) -> Result<Self> {
        let n = node.get("dim")?.dim()?;
        let twist = match node.opt("twist")? {
            Some(t) => t.matrix(n, n)?,
            None => Mat::identity(n),
        };
        let mut entries = Vec::new();
        let mut seen = std::collections::BTreeSet::new();
        for row in node.get("product")?.items()? {
            let cells = row.items()?;
            if cells.len() != 5 {
                return Err(row.error(format!("expected [i, j, k, l, c], found {} entries", cells.len())));
            }
            let (i, j, k, l) = (cells[0].index(n)?, cells[1].index(n)?, cells[2].index(n)?, cells[3].index(n)?);
            if i >= j {
                return Err(row.error("product rows must have i < j"));
            }
            if !seen.insert((i, j, k, l)) {
                return Err(row.error("duplicate row"));
            }
            entries.push((i, j, k, l, cells[4].rat()?));
        }
        let mut p = wrap(node, PreLie3::from_entries(n, entries, twist))?;
        if let Some(l) = node.opt("label")? {
            p = p.with_label(l.str()?);
        }
        Ok(p)
    }

    fn encode(&self) -> Value {
        let n = self.dim();
        let mut rows = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in 0..n {
                    for (l, c) in self.structure(i, j, k) {
                        rows.push(json!([i + 1, j + 1, k + 1, l + 1, fmt_rat(c)]));
                    }
                }
            }
        }
        object(vec![
            ("label", Value::String(self.label().to_string())),
            ("dim", json!(n)),
            ("product", Value::Array(rows)),
            ("twist", mat_json(self.twist())),
        ])
    }
}

impl Artifact for PreLieRep {
    fn decode(node: &Node) -> Result<Self> {
        let p: PreLie3 = node.get("prelie")?.artifact()?;
        let n = p.dim();
        let m = node.get("vdim")?.dim()?;
        let twist = match node.opt("B")? {
            Some(t) => t.matrix(m, m)?,
            None => Mat::identity(m),
        };
        let mut rho = vec![Mat::zeros(m, m); n * n];
        for (i, j, mat) in pair_family(&node.get("rho")?, n, m, true)? {
            rho[j * n + i] = -&mat;
            rho[i * n + j] = mat;
        }
        let mut mu = vec![Mat::zeros(m, m); n * n];
        for (i, j, mat) in pair_family(&node.get("mu")?, n, m, false)? {
            mu[i * n + j] = mat;
        }
        wrap(node, PreLieRep::new(p, rho, mu, twist))
    }

    fn encode(&self) -> Value {
        let n = self.base().dim();
        let upper = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).map(|(i, j)| (i, j, self.rho(i, j)));
        let all = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| (i, j, self.mu(i, j)));
        object(vec![
            ("prelie", self.base().encode()),
            ("vdim", json!(self.vdim())),
            ("rho", pair_json(upper)),
            ("mu", pair_json(all)),
            ("B", mat_json(self.twist())),
        ])
    }
}

impl Artifact for OOperator {
    fn decode(node: &Node) -> Result<Self> {
        let rep: Rep3 = node.get("rep")?.artifact()?;
        let t = node.get("T")?.matrix(rep.algebra().dim(), rep.vdim())?;
        wrap(node, OOperator::new(rep, t))
    }

    fn encode(&self) -> Value {
        object(vec![("rep", self.rep.encode()), ("T", mat_json(&self.t))])
    }
}

impl Artifact for RTensor {
    fn decode(node: &Node) -> Result<Self> {
        let a: Algebra3 = node.get("algebra")?.artifact()?;
        let n = a.dim();
        let r = node.get("r")?;
        let m = r.matrix(n, n)?;
        wrap(&r, RTensor::new(a, m))
    }

    fn encode(&self) -> Value {
        object(vec![("algebra", self.base().encode()), ("r", mat_json(self.entries()))])
    }
}

impl Artifact for BilForm {
    fn decode(node: &Node) -> Result<Self> {
        let k = node.get("kind")?;
        let kind = match k.str()? {
            "symmetric" => FormKind::Symmetric,
            "skew" => FormKind::Skew,
            other => return Err(k.error(format!("unknown kind `{other}`, expected symmetric or skew"))),
        };
        let mnode = node.get("matrix")?;
        let m = mnode.square_matrix()?;
        wrap(&mnode, BilForm::new(kind, m))
    }

    fn encode(&self) -> Value {
        object(vec![("kind", Value::String(self.kind().name().into())), ("matrix", mat_json(self.matrix()))])
    }
}

/// A bare matrix file `{"matrix": [...]}`, used for morphisms and
/// derivations.
impl Artifact for Mat {
    fn decode(node: &Node) -> Result<Self> {
        let mnode = node.get("matrix")?;
        let rows = mnode.items()?;
        let cols = rows.first().map(|r| r.items().map(|c| c.len())).transpose()?.unwrap_or(0);
        if rows.is_empty() || cols == 0 {
            return Err(mnode.error("empty matrix"));
        }
        mnode.matrix(rows.len(), cols)
    }

    fn encode(&self) -> Value {
        object(vec![("matrix", mat_json(self))])
    }
}

/// Checks a twist-like matrix against an expected dimension, citing both.
pub fn expect_dim(what: &str, found: usize, expected: usize) -> Result<()> {
    if found != expected {
        return Err(Error::Shape(format!("{what} has dimension {found}, expected {expected}")));
    }
    Ok(())
}
