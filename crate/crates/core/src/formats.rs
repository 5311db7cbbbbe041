//! Line-based text formats for block codes, convolutional encoders and
//! quantum seeds. Blank lines and `#` comments are ignored; errors carry
//! 1-based line and column.

use std::collections::BTreeMap;

use crate::algebra::linalg::FqMatrix;
use crate::algebra::{Field, Fq};
use crate::block::LinearCode;
use crate::conv::{ConvSeed, SystematicConvSeed};
use crate::error::{Error, Result};
use crate::quantum::{CliffordSeed, EaqccSpec, PauliWord, Roles};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FileKind {
    Block,
    Conv,
    Quantum,
}

/// Which format a text is in: a `T` line marks an encoder, role lines a
/// quantum seed, anything else a block code.
pub fn detect(text: &str) -> FileKind {
    for line in lines(text) {
        match line.toks[0].text {
            "T" => return FileKind::Conv,
            t if t.starts_with("IM") || t.starts_with("IP") => return FileKind::Quantum,
            _ => {}
        }
    }
    FileKind::Block
}

struct Tok<'a> {
    text: &'a str,
    col: usize,
}

struct Line<'a> {
    no: usize,
    toks: Vec<Tok<'a>>,
}

fn lines(text: &str) -> Vec<Line<'_>> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let body = raw.split('#').next().unwrap_or("");
            let mut toks = Vec::new();
            let mut start = None;
            for (j, ch) in body
                .char_indices()
                .chain(std::iter::once((body.len(), ' ')))
            {
                match (ch.is_whitespace(), start) {
                    (false, None) => start = Some(j),
                    (true, Some(s)) => {
                        toks.push(Tok {
                            text: &body[s..j],
                            col: body[..s].chars().count() + 1,
                        });
                        start = None;
                    }
                    _ => {}
                }
            }
            (!toks.is_empty()).then_some(Line { no: i + 1, toks })
        })
        .collect()
}

fn err(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        col,
        msg: msg.into(),
    }
}

/// Attaches a line number to a semantic error found after parsing.
fn at_line(line: usize, e: Error) -> Error {
    match e {
        Error::Parse { .. } => e,
        other => err(line, 1, other.to_string()),
    }
}

fn num<T: std::str::FromStr>(line: &Line, i: usize) -> Result<T> {
    let t = line.toks.get(i).ok_or_else(|| {
        err(
            line.no,
            line.toks.last().map_or(1, |t| t.col + t.text.len()),
            "missing number",
        )
    })?;
    t.text.parse().map_err(|_| {
        err(
            line.no,
            t.col,
            format!("'{}' is not a valid number", t.text),
        )
    })
}

fn arity(line: &Line, n: usize) -> Result<()> {
    if line.toks.len() != n {
        let col = line.toks.get(n).map_or(1, |t| t.col);
        return Err(err(
            line.no,
            col,
            format!("'{}' takes {} value(s)", line.toks[0].text, n - 1),
        ));
    }
    Ok(())
}

/// Header values shared by the classical formats, keyed by name.
struct Header {
    field: Option<(Field, usize)>,
    nums: BTreeMap<&'static str, (usize, usize)>,
}

impl Header {
    fn new() -> Header {
        Header {
            field: None,
            nums: BTreeMap::new(),
        }
    }

    fn get(&self, key: &'static str, last_line: usize) -> Result<usize> {
        self.nums
            .get(key)
            .map(|v| v.0)
            .ok_or_else(|| err(last_line, 1, format!("missing '{key}' line")))
    }

    fn field(&self, last_line: usize) -> Result<Field> {
        self.field
            .as_ref()
            .map(|f| f.0.clone())
            .ok_or_else(|| err(last_line, 1, "missing 'q' line"))
    }

    /// Consumes `line` if it is a header line for one of `keys` or `q`.
    fn take(&mut self, line: &Line, keys: &[&'static str]) -> Result<bool> {
        let key = line.toks[0].text;
        if key == "q" {
            if line.toks.len() < 3 {
                return Err(err(
                    line.no,
                    1,
                    "expected 'q <p> <r> [modulus coefficients]'",
                ));
            }
            let p: u32 = num(line, 1)?;
            let r: u32 = num(line, 2)?;
            let modulus = if line.toks.len() > 3 {
                Some(
                    (3..line.toks.len())
                        .map(|i| num(line, i))
                        .collect::<Result<Vec<u32>>>()?,
                )
            } else {
                None
            };
            let f = Field::new(p, r, modulus).map_err(|e| at_line(line.no, e))?;
            self.field = Some((f, line.no));
            return Ok(true);
        }
        if let Some(k) = keys.iter().find(|k| **k == key) {
            arity(line, 2)?;
            if self.nums.contains_key(k) {
                return Err(err(line.no, 1, format!("duplicate '{k}' line")));
            }
            self.nums.insert(k, (num(line, 1)?, line.no));
            return Ok(true);
        }
        Ok(false)
    }
}

fn element_row(field: &Field, line: &Line, width: usize) -> Result<Vec<Fq>> {
    if line.toks.len() != width {
        return Err(err(
            line.no,
            line.toks.get(width).map_or(1, |t| t.col),
            format!("expected {width} field elements, found {}", line.toks.len()),
        ));
    }
    (0..width)
        .map(|i| {
            let v: u32 = num(line, i)?;
            field.element(v).map_err(|_| {
                err(
                    line.no,
                    line.toks[i].col,
                    format!("{v} is not an element of GF({})", field.q()),
                )
            })
        })
        .collect()
}

/// `q <p> <r> [modulus]`, `n <n>`, `k <k>`, then k rows of n element
/// indices.
pub fn parse_block(text: &str) -> Result<LinearCode> {
    let ls = lines(text);
    let last = ls.last().map_or(1, |l| l.no);
    let mut h = Header::new();
    let mut rows = Vec::new();
    for line in &ls {
        if h.take(line, &["n", "k"])? {
            continue;
        }
        let f = h.field(line.no)?;
        let n = h.get("n", line.no)?;
        rows.push(element_row(&f, line, n)?);
    }
    let field = h.field(last)?;
    let n = h.get("n", last)?;
    let k = h.get("k", last)?;
    if rows.len() != k {
        return Err(err(
            last,
            1,
            format!("expected {k} generator rows, found {}", rows.len()),
        ));
    }
    LinearCode::new(field, n, rows).map_err(|e| at_line(last, e))
}

pub fn write_block(code: &LinearCode) -> String {
    let mut s = field_line(code.field());
    s += &format!("n {}\nk {}\n", code.n(), code.k());
    s += &matrix_lines(code.generator());
    s
}

fn field_line(f: &Field) -> String {
    let modulus: Vec<String> = f.modulus().iter().map(|c| c.to_string()).collect();
    if f.r() == 1 {
        format!("q {} 1\n", f.p())
    } else {
        format!("q {} {} {}\n", f.p(), f.r(), modulus.join(" "))
    }
}

fn matrix_lines(m: &FqMatrix) -> String {
    m.iter()
        .map(|row| {
            let r: Vec<String> = row.iter().map(|x| x.index().to_string()).collect();
            r.join(" ") + "\n"
        })
        .collect()
}

/// A parsed encoder file; `systematic` is set when the file asserts it.
#[derive(Clone, Debug)]
pub struct ConvFile {
    pub seed: ConvSeed,
    pub systematic: Option<SystematicConvSeed>,
}

/// `q`, `n`, `k`, `m`, an optional `systematic [leading|trailing]` line,
/// then `T` and m + k rows of m + n element indices in block order
/// (C A ; E B).
pub fn parse_conv(text: &str) -> Result<ConvFile> {
    let ls = lines(text);
    let last = ls.last().map_or(1, |l| l.no);
    let mut h = Header::new();
    let mut systematic: Option<(bool, usize)> = None;
    let mut t_line = None;
    let mut rows = Vec::new();
    for line in &ls {
        if t_line.is_none() {
            if h.take(line, &["n", "k", "m"])? {
                continue;
            }
            match line.toks[0].text {
                "systematic" => {
                    let leading = match line.toks.get(1).map(|t| t.text) {
                        None | Some("leading") => true,
                        Some("trailing") => false,
                        Some(other) => {
                            return Err(err(
                                line.no,
                                line.toks[1].col,
                                format!("unknown side '{other}'"),
                            ))
                        }
                    };
                    arity(line, line.toks.len().min(2))?;
                    systematic = Some((leading, line.no));
                }
                "T" => {
                    arity(line, 1)?;
                    t_line = Some(line.no);
                }
                other => return Err(err(line.no, 1, format!("unexpected '{other}' before 'T'"))),
            }
            continue;
        }
        let f = h.field(line.no)?;
        let width = h.get("n", line.no)? + h.get("m", line.no)?;
        rows.push(element_row(&f, line, width)?);
    }
    let field = h.field(last)?;
    let (n, k, m) = (h.get("n", last)?, h.get("k", last)?, h.get("m", last)?);
    let t_no = t_line.ok_or_else(|| err(last, 1, "missing 'T' line"))?;
    if rows.len() != m + k {
        return Err(err(
            last,
            1,
            format!("expected {} rows after 'T', found {}", m + k, rows.len()),
        ));
    }
    // the file lists columns as (outputs : next memory) and rows as
    // (memory ; inputs), which is the seed's own layout
    let seed = ConvSeed::new(field, n, k, m, rows).map_err(|e| at_line(t_no, e))?;
    let systematic = match systematic {
        None => None,
        Some((leading, no)) => Some(
            if leading {
                SystematicConvSeed::new(seed.clone())
            } else {
                SystematicConvSeed::new_trailing(seed.clone())
            }
            .map_err(|e| at_line(no, e))?,
        ),
    };
    Ok(ConvFile { seed, systematic })
}

pub fn write_conv(seed: &ConvSeed, systematic: Option<bool>) -> String {
    let mut s = field_line(seed.field());
    s += &format!("n {}\nk {}\nm {}\n", seed.n(), seed.k(), seed.m());
    match systematic {
        Some(true) => s += "systematic\n",
        Some(false) => s += "systematic trailing\n",
        None => {}
    }
    s += "T\n";
    s += &matrix_lines(seed.t());
    s
}

/// A quantum seed file before the seed and roles are validated.
#[derive(Clone, Debug)]
pub struct QuantumFile {
    pub n: usize,
    pub k: usize,
    pub c: usize,
    pub m: usize,
    pub roles: Roles,
    pub seed: CliffordSeed,
    last_line: usize,
}

impl QuantumFile {
    /// Validates the seed and roles.
    pub fn into_spec(self) -> Result<EaqccSpec> {
        let line = self.last_line;
        EaqccSpec::new(self.seed, self.n, self.k, self.c, self.m, self.roles)
            .map_err(|e| at_line(line, e))
    }
}

/// `n`, `k`, `c`, `m`, role lines `IM:`, `IL:`, `IA:`, `IE:`, `IMout:`,
/// `IP:` with 1-based positions, then `Z<i> -> <word>` and
/// `X<i> -> <word>` for every qubit.
pub fn parse_quantum(text: &str) -> Result<EaqccSpec> {
    parse_quantum_file(text)?.into_spec()
}

/// Parses a quantum seed file without checking the Clifford relations or
/// the role partition.
pub fn parse_quantum_file(text: &str) -> Result<QuantumFile> {
    let ls = lines(text);
    let last = ls.last().map_or(1, |l| l.no);
    let mut nums: BTreeMap<&str, usize> = BTreeMap::new();
    let mut roles: BTreeMap<&str, Vec<usize>> = BTreeMap::new();
    let mut images: BTreeMap<(char, usize), (PauliWord, usize)> = BTreeMap::new();
    const ROLE_KEYS: [&str; 6] = ["IM", "IL", "IA", "IE", "IMout", "IP"];
    for line in &ls {
        let key = line.toks[0].text;
        if let Some(name) = key.strip_suffix(':') {
            let name = ROLE_KEYS
                .iter()
                .find(|k| **k == name)
                .ok_or_else(|| err(line.no, 1, format!("unknown role '{name}'")))?;
            if roles.contains_key(name) {
                return Err(err(line.no, 1, format!("duplicate role line '{name}'")));
            }
            let pos = (1..line.toks.len())
                .map(|i| {
                    let v: usize = num(line, i)?;
                    if v == 0 {
                        return Err(err(line.no, line.toks[i].col, "positions are 1-based"));
                    }
                    Ok(v - 1)
                })
                .collect::<Result<Vec<_>>>()?;
            roles.insert(name, pos);
        } else if ["n", "k", "c", "m"].contains(&key) {
            arity(line, 2)?;
            if nums.insert(key, num(line, 1)?).is_some() {
                return Err(err(line.no, 1, format!("duplicate '{key}' line")));
            }
        } else if let (Some(kind @ ('Z' | 'X')), Ok(i)) =
            (key.chars().next(), key[1..].parse::<usize>())
        {
            if line.toks.len() != 3 || line.toks[1].text != "->" {
                return Err(err(line.no, 1, format!("expected '{key} -> <Pauli word>'")));
            }
            if i == 0 {
                return Err(err(line.no, 2, "qubits are 1-based"));
            }
            let w: PauliWord = line.toks[2].text.parse().map_err(|e| match e {
                Error::Parse { col, msg, .. } => err(line.no, line.toks[2].col + col - 1, msg),
                other => at_line(line.no, other),
            })?;
            if images.insert((kind, i - 1), (w, line.no)).is_some() {
                return Err(err(line.no, 1, format!("duplicate image for {key}")));
            }
        } else {
            return Err(err(line.no, 1, format!("unexpected '{key}'")));
        }
    }
    let get = |k: &str| {
        nums.get(k)
            .copied()
            .ok_or_else(|| err(last, 1, format!("missing '{k}' line")))
    };
    let (n, k, c, m) = (get("n")?, get("k")?, get("c")?, get("m")?);
    let width = n + m;
    let mut z = Vec::with_capacity(width);
    let mut x = Vec::with_capacity(width);
    for i in 0..width {
        for (kind, out) in [('Z', &mut z), ('X', &mut x)] {
            let (w, no) = images
                .get(&(kind, i))
                .ok_or_else(|| err(last, 1, format!("missing image of {kind}{}", i + 1)))?;
            if w.len() != width {
                return Err(err(
                    *no,
                    1,
                    format!("image has {} qubits, expected {width}", w.len()),
                ));
            }
            out.push(*w);
        }
    }
    if let Some((&(kind, i), &(_, no))) = images.iter().find(|((_, i), _)| *i >= width) {
        return Err(err(
            no,
            1,
            format!("{kind}{} is beyond n + m = {width}", i + 1),
        ));
    }
    let role = |key: &str| roles.get(key).cloned().unwrap_or_default();
    let r = Roles {
        memory: role("IM"),
        logical: role("IL"),
        ancilla: role("IA"),
        ebit: role("IE"),
        memory_out: role("IMout"),
        physical: role("IP"),
    };
    let seed = CliffordSeed::from_images(z, x).map_err(|e| at_line(last, e))?;
    Ok(QuantumFile {
        n,
        k,
        c,
        m,
        roles: r,
        seed,
        last_line: last,
    })
}

pub fn write_quantum(spec: &EaqccSpec) -> String {
    let r = spec.roles();
    let list = |v: &[usize]| -> String { v.iter().map(|i| format!(" {}", i + 1)).collect() };
    let mut s = format!(
        "n {}\nk {}\nc {}\nm {}\n",
        spec.n(),
        spec.k(),
        spec.c(),
        spec.m()
    );
    for (key, v) in [
        ("IM", &r.memory),
        ("IL", &r.logical),
        ("IA", &r.ancilla),
        ("IE", &r.ebit),
        ("IMout", &r.memory_out),
        ("IP", &r.physical),
    ] {
        s += &format!("{key}:{}\n", list(v));
    }
    let seed = spec.seed();
    for i in 0..seed.width() {
        s += &format!("Z{} -> {}\n", i + 1, seed.z_image(i));
    }
    for i in 0..seed.width() {
        s += &format!("X{} -> {}\n", i + 1, seed.x_image(i));
    }
    s
}
