//! A small language for naming groups.
//!
//! ```text
//! spec     := name "(" int ")" | "K4" | "GL2(" p ")" | "SL2(" p ")" | "PSL2(" p ")"
//!           | "prod(" spec "," spec ")" | "sdp(" spec "," spec ";" action ")"
//!           | "gens[" int ":" cycles "]" | "quot(" spec ";" selector ")" | "@" corpus-name
//! name     := "S" | "A" | "C" | "D"
//! selector := "trivial" | "whole" | "center" | "derived" | "frattini" | "fitting"
//!           | "gens:" cycles | "order:" int ":" int
//! ```
//!
//! `action` lists, for each generator of the second factor, the images of the
//! first factor's generators (see [`ActionSpec::parse`]).

use std::fmt;
use std::sync::Arc;

use crate::constructors::{
    direct_product, is_prime, linear_group, named_group, order75_group, quaternion8,
    quotient_group, semidihedral16, semidirect_product, split_top_level, ActionSpec, LinearKind,
    NamedKind,
};
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::lattice::{Lattice, LatticeOptions, NodeId};
use crate::perm::Permutation;
use crate::structure;

/// Built-in groups reachable through `@name`.
pub const FIXTURES: &[(&str, &str)] = &[
    ("order75", "(Z5 x Z5) x| Z3 with c^-1 a c = (ab)^-1, c^-1 b c = a"),
    ("Q8", "quaternion group, regular representation"),
    ("SD16", "semidihedral group of order 16"),
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Named(NamedKind, usize),
    Linear(LinearKind, u64),
    Prod(Box<GroupSpec>, Box<GroupSpec>),
    Sdp(Box<GroupSpec>, Box<GroupSpec>, String),
    Gens(usize, Vec<Permutation>),
    Quot(Box<GroupSpec>, Selector),
    CorpusRef(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Selector {
    Trivial,
    Whole,
    Center,
    Derived,
    Frattini,
    Fitting,
    /// Smallest subgroup containing the listed permutations.
    Gens(Vec<String>),
    /// The `index`-th node (0-based) of the given order, in canonical order.
    Order { order: usize, index: usize },
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Named(NamedKind::KleinFour, _) => f.write_str("K4"),
            GroupSpec::Named(kind, n) => {
                let name = match kind {
                    NamedKind::Symmetric => "S",
                    NamedKind::Alternating => "A",
                    NamedKind::Cyclic => "C",
                    NamedKind::Dihedral => "D",
                    NamedKind::KleinFour => unreachable!(),
                };
                write!(f, "{name}({n})")
            }
            GroupSpec::Linear(kind, p) => write!(f, "{}({p})", kind.name()),
            GroupSpec::Prod(a, b) => write!(f, "prod({a}, {b})"),
            GroupSpec::Sdp(a, b, action) => write!(f, "sdp({a}, {b}; {action})"),
            GroupSpec::Gens(degree, gens) => {
                let list: Vec<String> = gens.iter().map(Permutation::to_cycle_string).collect();
                if list.is_empty() {
                    write!(f, "gens[{degree}:]")
                } else {
                    write!(f, "gens[{degree}: {}]", list.join(", "))
                }
            }
            GroupSpec::Quot(g, sel) => write!(f, "quot({g}; {sel})"),
            GroupSpec::CorpusRef(name) => write!(f, "@{name}"),
        }
    }
}

impl fmt::Display for Selector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Selector::Trivial => f.write_str("trivial"),
            Selector::Whole => f.write_str("whole"),
            Selector::Center => f.write_str("center"),
            Selector::Derived => f.write_str("derived"),
            Selector::Frattini => f.write_str("frattini"),
            Selector::Fitting => f.write_str("fitting"),
            Selector::Gens(gens) => write!(f, "gens: {}", gens.join(", ")),
            Selector::Order { order, index } => write!(f, "order:{order}:{index}"),
        }
    }
}

impl Selector {
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        let simple = match t {
            "trivial" => Some(Selector::Trivial),
            "whole" => Some(Selector::Whole),
            "center" => Some(Selector::Center),
            "derived" => Some(Selector::Derived),
            "frattini" => Some(Selector::Frattini),
            "fitting" => Some(Selector::Fitting),
            _ => None,
        };
        if let Some(s) = simple {
            return Ok(s);
        }
        if let Some(rest) = t.strip_prefix("gens:") {
            let gens: Vec<String> = split_top_level(rest, ',')
                .into_iter()
                .filter(|s| !s.is_empty())
                .map(str::to_string)
                .collect();
            if gens.is_empty() {
                return Err(Error::Selector("`gens:` needs at least one permutation".into()));
            }
            return Ok(Selector::Gens(gens));
        }
        if let Some(rest) = t.strip_prefix("order:") {
            let mut parts = rest.split(':');
            let (Some(k), Some(i), None) = (parts.next(), parts.next(), parts.next()) else {
                return Err(Error::Selector(format!("expected order:<k>:<i>, found `{t}`")));
            };
            let parse = |s: &str| {
                s.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Selector(format!("`{s}` is not a number")))
            };
            return Ok(Selector::Order {
                order: parse(k)?,
                index: parse(i)?,
            });
        }
        Err(Error::Selector(format!("unknown selector `{t}`")))
    }

    pub fn resolve(&self, lattice: &Lattice) -> Result<NodeId> {
        Ok(match self {
            Selector::Trivial => lattice.trivial(),
            Selector::Whole => lattice.top(),
            Selector::Center => structure::center(lattice),
            Selector::Derived => structure::derived_subgroup(lattice),
            Selector::Frattini => structure::frattini(lattice),
            Selector::Fitting => structure::fitting(lattice),
            Selector::Gens(gens) => {
                let group = lattice.group();
                let mut idx = Vec::new();
                for g in gens {
                    let p = Permutation::parse(g, group.degree())?;
                    idx.push(group.index_of(&p).ok_or_else(|| {
                        Error::Selector(format!("{p} is not an element of the group"))
                    })?);
                }
                lattice.generated_by(&idx)
            }
            Selector::Order { order, index } => *lattice
                .nodes_of_order(*order)
                .get(*index)
                .ok_or_else(|| {
                    Error::Selector(format!("there is no subgroup #{index} of order {order}"))
                })?,
        })
    }
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn error(&self, expected: &str) -> Error {
        let consumed = &self.text[..self.pos];
        let line = consumed.matches('\n').count() + 1;
        let column = consumed.rsplit('\n').next().unwrap().chars().count() + 1;
        let found = self.text[self.pos..]
            .chars()
            .next()
            .map_or_else(|| "end of input".to_string(), |c| format!("`{c}`"));
        Error::SpecSyntax {
            line,
            column,
            expected: expected.to_string(),
            found,
        }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.text[self.pos..].chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.text[self.pos..].chars().next()
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(self.error(&format!("`{c}`")))
        }
    }

    fn ident(&mut self) -> &'a str {
        self.skip_ws();
        let start = self.pos;
        while let Some(c) = self.text[self.pos..].chars().next() {
            if !(c.is_ascii_alphanumeric() || c == '_' || c == '-') {
                break;
            }
            self.pos += 1;
        }
        &self.text[start..self.pos]
    }

    fn int(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.text[self.pos..].starts_with(|c: char| c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.text[start..self.pos]
            .parse()
            .map_err(|_| {
                self.pos = start;
                self.error("an integer")
            })
    }

    /// Raw text up to (not including) the `close` that balances the
    /// enclosing bracket.
    fn raw_until(&mut self, close: char) -> Result<&'a str> {
        let start = self.pos;
        let mut depth = 0i32;
        for (off, c) in self.text[start..].char_indices() {
            match c {
                '(' | '[' => depth += 1,
                ')' | ']' if depth > 0 => depth -= 1,
                c if c == close && depth == 0 => {
                    self.pos = start + off;
                    return Ok(self.text[start..start + off].trim());
                }
                _ => {}
            }
        }
        self.pos = self.text.len();
        Err(self.error(&format!("`{close}`")))
    }

    fn spec(&mut self) -> Result<GroupSpec> {
        if self.peek() == Some('@') {
            self.pos += 1;
            let name = self.ident();
            if name.is_empty() {
                return Err(self.error("a corpus name"));
            }
            if !FIXTURES.iter().any(|(n, _)| *n == name) {
                return Err(Error::UnknownCorpusName(name.to_string()));
            }
            return Ok(GroupSpec::CorpusRef(name.to_string()));
        }
        let ident_start = self.pos;
        let name = self.ident();
        let spec = match name {
            "K4" => GroupSpec::Named(NamedKind::KleinFour, 4),
            "S" | "A" | "C" | "D" => {
                let kind = match name {
                    "S" => NamedKind::Symmetric,
                    "A" => NamedKind::Alternating,
                    "C" => NamedKind::Cyclic,
                    _ => NamedKind::Dihedral,
                };
                self.expect('(')?;
                let n = self.int()? as usize;
                self.expect(')')?;
                GroupSpec::Named(kind, n)
            }
            "GL2" | "SL2" | "PSL2" => {
                let kind = match name {
                    "GL2" => LinearKind::GL2,
                    "SL2" => LinearKind::SL2,
                    _ => LinearKind::PSL2,
                };
                self.expect('(')?;
                let p = self.int()?;
                if !is_prime(p) {
                    return Err(Error::NotPrime(p));
                }
                self.expect(')')?;
                GroupSpec::Linear(kind, p)
            }
            "prod" => {
                self.expect('(')?;
                let a = self.spec()?;
                self.expect(',')?;
                let b = self.spec()?;
                self.expect(')')?;
                GroupSpec::Prod(Box::new(a), Box::new(b))
            }
            "sdp" => {
                self.expect('(')?;
                let a = self.spec()?;
                self.expect(',')?;
                let b = self.spec()?;
                self.expect(';')?;
                let action = self.raw_until(')')?.to_string();
                self.expect(')')?;
                GroupSpec::Sdp(Box::new(a), Box::new(b), action)
            }
            "gens" => {
                self.expect('[')?;
                let degree = self.int()? as usize;
                if degree == 0 {
                    return Err(self.error("a positive degree"));
                }
                self.expect(':')?;
                let body_start = self.pos;
                let body = self.raw_until(']')?;
                let mut gens = Vec::new();
                for item in split_top_level(body, ',') {
                    if item.is_empty() {
                        continue;
                    }
                    gens.push(Permutation::parse(item, degree).map_err(|e| {
                        self.pos = body_start;
                        match e {
                            Error::CycleSyntax { message, .. } => self.error(&format!(
                                "cycle notation ({message})"
                            )),
                            other => other,
                        }
                    })?);
                }
                self.expect(']')?;
                GroupSpec::Gens(degree, gens)
            }
            "quot" => {
                self.expect('(')?;
                let g = self.spec()?;
                self.expect(';')?;
                let sel = Selector::parse(self.raw_until(')')?)?;
                self.expect(')')?;
                GroupSpec::Quot(Box::new(g), sel)
            }
            _ => {
                self.pos = ident_start;
                self.skip_ws();
                return Err(self.error("a group name"));
            }
        };
        Ok(spec)
    }
}

/// Parses a group spec; trailing text is an error.
pub fn parse_spec(text: &str) -> Result<GroupSpec> {
    let mut parser = Parser { text, pos: 0 };
    let spec = parser.spec()?;
    if parser.peek().is_some() {
        return Err(parser.error("end of input"));
    }
    Ok(spec)
}

/// Builds the group a spec names, labelled with the spec's canonical text.
pub fn build(spec: &GroupSpec, cap: usize) -> Result<PermGroup> {
    let group = match spec {
        GroupSpec::Named(kind, n) => named_group(*kind, *n, cap)?,
        GroupSpec::Linear(kind, p) => linear_group(*kind, *p, cap)?,
        GroupSpec::Prod(a, b) => direct_product(&build(a, cap)?, &build(b, cap)?, cap)?,
        GroupSpec::Sdp(a, b, action) => {
            let n = build(a, cap)?;
            let h = build(b, cap)?;
            let action = ActionSpec::parse(action, n.degree())
                .map_err(|e| Error::InvalidAction(e.to_string()))?;
            semidirect_product(&n, &h, &action, cap)?
        }
        GroupSpec::Gens(degree, gens) => PermGroup::generate(*degree, gens.clone(), cap)?,
        GroupSpec::Quot(g, sel) => {
            let g = Arc::new(build(g, cap)?);
            let lattice = Lattice::enumerate_with(
                g.clone(),
                &LatticeOptions {
                    cap: Some(cap),
                    progress: false,
                },
            )?;
            let node = sel.resolve(&lattice)?;
            quotient_group(&g, lattice.node(node).bits())?
        }
        GroupSpec::CorpusRef(name) => match name.as_str() {
            "order75" => order75_group(cap)?,
            "Q8" => quaternion8(),
            "SD16" => semidihedral16(),
            other => return Err(Error::UnknownCorpusName(other.to_string())),
        },
    };
    Ok(group.with_label(spec.to_string()))
}

/// Parse and build in one step.
pub fn build_str(text: &str, cap: usize) -> Result<PermGroup> {
    build(&parse_spec(text)?, cap)
}
