//! Text format for a field plus a code.
//!
//! ```text
//! # comments run to the end of the line
//! p=2
//! e=1
//! m=2
//! modulus=1,1,1
//! gamma=a
//! generator=1,1,1,a,a,a
//! ```
//!
//! The field block is `p`, `m`, optional `e` (default 1) and optional
//! `modulus` (coefficients low to high). The code block is exactly one of:
//! one or more `generator=` rows (an `F_{q^m}`-linear code), one or more
//! `additive=` rows (their `F_p`-span), `cyclic n=<int> g=<poly>` or
//! `gabidulin n=<int> k=<int> points=<list>`. `n=` may be given on its own
//! line to fix the length of an empty generator. Elements are written as
//! `0`, `1`, `a`, `a^k` or as integer codes.

use std::fmt;
use std::str::FromStr;

use crate::codes::{AdditiveCode, Code, LinearCode};
use crate::error::{Error, Result};
use crate::gf::{Field, Gf, Notation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CodeSpec {
    Generator(Vec<Vec<Gf>>),
    Additive(Vec<Vec<Gf>>),
    Cyclic { n: usize, g: Vec<Gf> },
    Gabidulin { n: usize, k: usize, points: Vec<Gf> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeFile {
    pub field: Field,
    pub gamma: Option<Gf>,
    /// Explicit length, only needed when there are no rows.
    pub n: Option<usize>,
    pub code: CodeSpec,
}

/// A parsed code of either kind.
#[derive(Clone, Debug)]
pub enum AnyCode {
    Linear(LinearCode),
    Additive(AdditiveCode),
}

impl AnyCode {
    pub fn as_linear(&self) -> Option<&LinearCode> {
        match self {
            AnyCode::Linear(c) => Some(c),
            AnyCode::Additive(_) => None,
        }
    }

    fn inner(&self) -> &dyn Code {
        match self {
            AnyCode::Linear(c) => c,
            AnyCode::Additive(c) => c,
        }
    }
}

impl Code for AnyCode {
    fn field(&self) -> &Field {
        self.inner().field()
    }
    fn length(&self) -> usize {
        self.inner().length()
    }
    fn rows(&self) -> &[Vec<Gf>] {
        self.inner().rows()
    }
    fn radix(&self) -> u64 {
        self.inner().radix()
    }
    fn scalar(&self, digit: u64) -> Gf {
        self.inner().scalar(digit)
    }
    fn prime_field_generators(&self) -> Vec<Vec<Gf>> {
        self.inner().prime_field_generators()
    }
}

fn err(line: usize, msg: impl fmt::Display) -> Error {
    Error::Parse(format!("line {line}: {msg}"))
}

fn parse_usize(line: usize, key: &str, v: &str) -> Result<usize> {
    v.trim().parse().map_err(|_| err(line, format!("{key} must be a non-negative integer, got {v:?}")))
}

fn parse_u64_list(line: usize, v: &str) -> Result<Vec<u64>> {
    v.split(',')
        .map(|c| c.trim().parse().map_err(|_| err(line, format!("bad coefficient {c:?}"))))
        .collect()
}

/// `key=value` tokens separated by whitespace, each key at most once.
fn keyed_tokens<'a>(line: usize, rest: &'a str, allowed: &[&str]) -> Result<Vec<(&'a str, &'a str)>> {
    let mut out: Vec<(&str, &str)> = Vec::new();
    for tok in rest.split_whitespace() {
        let (k, v) = tok.split_once('=').ok_or_else(|| err(line, format!("expected key=value, got {tok:?}")))?;
        if !allowed.contains(&k) {
            return Err(err(line, format!("unknown key {k:?}")));
        }
        if out.iter().any(|(seen, _)| *seen == k) {
            return Err(err(line, format!("duplicate key {k:?}")));
        }
        out.push((k, v));
    }
    for k in allowed {
        if !out.iter().any(|(seen, _)| seen == k) {
            return Err(err(line, format!("missing {k}=")));
        }
    }
    Ok(out)
}

fn lookup<'a>(pairs: &[(&'a str, &'a str)], key: &str) -> &'a str {
    pairs.iter().find(|(k, _)| *k == key).map(|(_, v)| *v).unwrap_or_default()
}

enum RawCode {
    Generator(Vec<(usize, String)>),
    Additive(Vec<(usize, String)>),
    Cyclic { line: usize, n: usize, g: String },
    Gabidulin { line: usize, n: usize, k: usize, points: String },
}

impl FromStr for CodeFile {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut p = None;
        let mut e = None;
        let mut m = None;
        let mut modulus = None;
        let mut gamma: Option<(usize, String)> = None;
        let mut n = None;
        let mut raw: Option<RawCode> = None;

        let set_once = |slot: &mut Option<usize>, line: usize, key: &str, v: &str| -> Result<()> {
            if slot.is_some() {
                return Err(err(line, format!("duplicate key {key:?}")));
            }
            *slot = Some(parse_usize(line, key, v)?);
            Ok(())
        };

        for (idx, full) in text.lines().enumerate() {
            let line = idx + 1;
            let body = full.split('#').next().unwrap_or_default().trim();
            if body.is_empty() {
                continue;
            }
            let (head, rest) = body.split_once(char::is_whitespace).unwrap_or((body, ""));
            if head == "cyclic" || head == "gabidulin" {
                if raw.is_some() {
                    return Err(err(line, "a code block is already given"));
                }
                raw = Some(if head == "cyclic" {
                    let kv = keyed_tokens(line, rest, &["n", "g"])?;
                    RawCode::Cyclic {
                        line,
                        n: parse_usize(line, "n", lookup(&kv, "n"))?,
                        g: lookup(&kv, "g").to_string(),
                    }
                } else {
                    let kv = keyed_tokens(line, rest, &["n", "k", "points"])?;
                    RawCode::Gabidulin {
                        line,
                        n: parse_usize(line, "n", lookup(&kv, "n"))?,
                        k: parse_usize(line, "k", lookup(&kv, "k"))?,
                        points: lookup(&kv, "points").to_string(),
                    }
                });
                continue;
            }
            let (key, value) = body
                .split_once('=')
                .ok_or_else(|| err(line, format!("expected key=value, got {body:?}")))?;
            let (key, value) = (key.trim(), value.trim());
            match key {
                "p" => set_once(&mut p, line, key, value)?,
                "e" => set_once(&mut e, line, key, value)?,
                "m" => set_once(&mut m, line, key, value)?,
                "n" => set_once(&mut n, line, key, value)?,
                "modulus" => {
                    if modulus.is_some() {
                        return Err(err(line, "duplicate key \"modulus\""));
                    }
                    modulus = Some(parse_u64_list(line, value)?);
                }
                "gamma" => {
                    if gamma.is_some() {
                        return Err(err(line, "duplicate key \"gamma\""));
                    }
                    gamma = Some((line, value.to_string()));
                }
                "generator" | "additive" => {
                    let row = (line, value.to_string());
                    match (&mut raw, key) {
                        (None, "generator") => raw = Some(RawCode::Generator(vec![row])),
                        (None, _) => raw = Some(RawCode::Additive(vec![row])),
                        (Some(RawCode::Generator(rows)), "generator") => rows.push(row),
                        (Some(RawCode::Additive(rows)), "additive") => rows.push(row),
                        _ => return Err(err(line, "a different code block is already given")),
                    }
                }
                _ => return Err(err(line, format!("unknown key {key:?}"))),
            }
        }

        let p = p.ok_or_else(|| Error::Parse("missing p=".into()))?;
        let m = m.ok_or_else(|| Error::Parse("missing m=".into()))?;
        let e = e.unwrap_or(1);
        let field = Field::new(p as u64, e as u32, m as u32, modulus)?;
        let elem = |line: usize, s: &str| field.parse_element(s).map_err(|x| err(line, x));
        let vector = |line: usize, s: &str| -> Result<Vec<Gf>> {
            field.parse_vector(s).map_err(|x| err(line, x))
        };
        let gamma = gamma.map(|(line, s)| elem(line, &s)).transpose()?;

        let rows_of = |rows: Vec<(usize, String)>| -> Result<Vec<Vec<Gf>>> {
            let mut out: Vec<Vec<Gf>> = Vec::with_capacity(rows.len());
            for (line, s) in rows {
                let v = vector(line, &s)?;
                let want = n.or(out.first().map(Vec::len));
                if let Some(w) = want.filter(|&w| w != v.len()) {
                    return Err(err(line, format!("row has length {}, expected {w}", v.len())));
                }
                out.push(v);
            }
            Ok(out)
        };
        let code = match raw {
            None if n.is_some() => CodeSpec::Generator(Vec::new()),
            None => return Err(Error::Parse("missing code block".into())),
            Some(RawCode::Generator(rows)) => CodeSpec::Generator(rows_of(rows)?),
            Some(RawCode::Additive(rows)) => CodeSpec::Additive(rows_of(rows)?),
            Some(RawCode::Cyclic { line, n: len, g }) => {
                if n.is_some_and(|x| x != len) {
                    return Err(err(line, "n disagrees with the standalone n="));
                }
                CodeSpec::Cyclic { n: len, g: vector(line, &g)? }
            }
            Some(RawCode::Gabidulin { line, n: len, k, points }) => {
                if n.is_some_and(|x| x != len) {
                    return Err(err(line, "n disagrees with the standalone n="));
                }
                let points = vector(line, &points)?;
                if points.len() != len {
                    return Err(err(line, format!("{} points given for n = {len}", points.len())));
                }
                CodeSpec::Gabidulin { n: len, k, points }
            }
        };
        let n = match code {
            CodeSpec::Generator(_) | CodeSpec::Additive(_) => n,
            _ => None,
        };
        Ok(CodeFile { field, gamma, n, code })
    }
}

impl CodeFile {
    pub fn parse(text: &str) -> Result<Self> {
        text.parse()
    }

    /// Block length.
    pub fn length(&self) -> usize {
        match &self.code {
            CodeSpec::Generator(rows) | CodeSpec::Additive(rows) => {
                rows.first().map(Vec::len).or(self.n).unwrap_or(0)
            }
            CodeSpec::Cyclic { n, .. } | CodeSpec::Gabidulin { n, .. } => *n,
        }
    }

    pub fn build(&self) -> Result<AnyCode> {
        let f = &self.field;
        Ok(match &self.code {
            CodeSpec::Generator(rows) if rows.is_empty() => AnyCode::Linear(LinearCode::zero(f, self.length())),
            CodeSpec::Generator(rows) => AnyCode::Linear(LinearCode::from_generator(f, rows.clone())?),
            CodeSpec::Additive(rows) => AnyCode::Additive(AdditiveCode::new(f, self.length(), rows.clone())?),
            CodeSpec::Cyclic { n, g } => AnyCode::Linear(LinearCode::cyclic(f, *n, g)?),
            CodeSpec::Gabidulin { k, points, .. } => AnyCode::Linear(LinearCode::gabidulin(f, *k, points)?),
        })
    }

    /// `gamma=` if given, otherwise the field's default.
    pub fn gamma_or_default(&self) -> Gf {
        self.gamma.unwrap_or_else(|| self.field.default_gamma())
    }

    /// A file describing an additive code with the same field block.
    pub fn additive(field: &Field, gamma: Option<Gf>, n: usize, rows: Vec<Vec<Gf>>) -> Self {
        CodeFile {
            field: field.clone(),
            gamma,
            n: rows.is_empty().then_some(n),
            code: CodeSpec::Additive(rows),
        }
    }
}

impl fmt::Display for CodeFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let spec = self.field.spec();
        let list = |v: &[Gf]| -> String {
            v.iter()
                .map(|&x| self.field.format_element(x, Notation::Power))
                .collect::<Vec<_>>()
                .join(",")
        };
        writeln!(f, "p={}", spec.p)?;
        writeln!(f, "e={}", spec.e)?;
        writeln!(f, "m={}", spec.m)?;
        let modulus: Vec<String> = spec.modulus.iter().map(u64::to_string).collect();
        writeln!(f, "modulus={}", modulus.join(","))?;
        if let Some(g) = self.gamma {
            writeln!(f, "gamma={}", self.field.format_element(g, Notation::Power))?;
        }
        if let Some(n) = self.n {
            writeln!(f, "n={n}")?;
        }
        match &self.code {
            CodeSpec::Generator(rows) => {
                for r in rows {
                    writeln!(f, "generator={}", list(r))?;
                }
            }
            CodeSpec::Additive(rows) => {
                for r in rows {
                    writeln!(f, "additive={}", list(r))?;
                }
            }
            CodeSpec::Cyclic { n, g } => writeln!(f, "cyclic n={n} g={}", list(g))?,
            CodeSpec::Gabidulin { n, k, points } => writeln!(f, "gabidulin n={n} k={k} points={}", list(points))?,
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::Code;

    const EXAMPLE_ONE: &str = "# F_4 with a^2 = a + 1\np=2\nm=2\ngenerator=1,1,1,a,a,a\n";

    #[test]
    fn parses_and_builds() {
        let cf: CodeFile = EXAMPLE_ONE.parse().unwrap();
        assert_eq!(cf.field.spec().modulus, vec![1, 1, 1]);
        let c = cf.build().unwrap();
        assert_eq!(c.length(), 6);
        assert_eq!(c.as_linear().unwrap().dimension(), 1);
    }

    #[test]
    fn round_trip_is_stable() {
        let texts = [
            EXAMPLE_ONE,
            "p=2\ne=2\nm=2\nmodulus=1,1,0,0,1\ncyclic n=17 g=1,a^12,a^2,a^12,1\n",
            "p=2\nm=4\ngabidulin n=4 k=2 points=1,a,a^2,a^3\n",
            "p=2\nm=2\ngamma=a^2\nadditive=a,1\nadditive=1,0\n",
            "p=3\nm=2\nn=4\n",
        ];
        for t in texts {
            let a: CodeFile = t.parse().unwrap();
            let printed = a.to_string();
            let b: CodeFile = printed.parse().unwrap();
            assert_eq!(a, b);
            assert_eq!(printed, b.to_string());
            a.build().unwrap();
        }
    }

    #[test]
    fn rejects_bad_input() {
        for t in [
            "p=2\nm=2\nfoo=1\ngenerator=1,1\n",
            "p=2\nm=2\n",
            "p=2\np=2\nm=2\ngenerator=1\n",
            "p=2\nm=2\ngenerator=1,1\ngenerator=1\n",
            "p=2\nm=2\ngenerator=1,1\nadditive=1,1\n",
            "p=2\nm=2\ncyclic n=3 g=1,1 h=2\n",
            "p=2\nm=2\ngabidulin n=2 k=1 points=1\n",
            "p=2\nm=2\ngenerator=1,b\n",
            "m=2\ngenerator=1\n",
        ] {
            assert!(matches!(t.parse::<CodeFile>(), Err(Error::Parse(_))), "{t:?}");
        }
        assert!(matches!("p=4\nm=2\ngenerator=1\n".parse::<CodeFile>(), Err(Error::NonPrime(4))));
    }
}
