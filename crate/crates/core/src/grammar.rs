//! Context-free grammars acting as formal derivatives.
//!
//! A grammar maps variables to polynomials; it induces the derivation
//! `D(f) = sum_v rule(v) * df/dv`. Variables without a rule are constants.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use num_bigint::BigInt;
use thiserror::Error;

use crate::expr::{self, ExprError};
use crate::poly::{Monomial, Polynomial, Var};

#[derive(Debug, Error)]
pub enum GrammarError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: bad right-hand side: {source}")]
    Expr {
        line: usize,
        #[source]
        source: ExprError,
    },
    #[error("line {line}: duplicate rule for `{name}`")]
    DuplicateRule { line: usize, name: String },
    #[error("line {line}: `{name}` has no rule of its own (strict mode)")]
    UndeclaredToken { line: usize, name: String },
    #[error("unknown grammar preset `{0}`")]
    UnknownPreset(String),
    #[error("index must be at least 1, got {0}")]
    IndexOutOfRange(u32),
    #[error("cannot read grammar file: {0}")]
    Io(#[from] std::io::Error),
}

#[derive(Clone)]
pub struct Grammar {
    name: Option<String>,
    rules: HashMap<Var, Polynomial>,
    order: Vec<Var>,
}

/// Grammars compare by their rule sets only.
impl PartialEq for Grammar {
    fn eq(&self, other: &Self) -> bool {
        self.rules == other.rules
    }
}

impl fmt::Debug for Grammar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Grammar")
            .field("name", &self.name)
            .field("rules", &self.to_string())
            .finish()
    }
}

/// One `lhs -> rhs` line per rule, in declaration order.
impl fmt::Display for Grammar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (v, rhs)) in self.rules().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{v} -> {}", rhs.clone().with_order_vars(&self.order))?;
        }
        Ok(())
    }
}

impl Grammar {
    /// Builds a grammar from `(variable, rule)` pairs; the pair order becomes
    /// the variable order. Panics on a duplicate left side.
    pub fn new<V: Into<Var>>(rules: impl IntoIterator<Item = (V, Polynomial)>) -> Grammar {
        let mut g = Grammar {
            name: None,
            rules: HashMap::new(),
            order: Vec::new(),
        };
        for (v, rhs) in rules {
            let v = v.into();
            assert!(!g.rules.contains_key(&v), "duplicate rule for `{v}`");
            g.order.push(v);
            g.rules.insert(v, rhs);
        }
        g.extend_order_from_rules();
        g
    }

    fn extend_order_from_rules(&mut self) {
        let mut extra = Vec::new();
        for v in &self.order {
            for w in self.rules[v].print_order() {
                if !self.order.contains(&w) && !extra.contains(&w) {
                    extra.push(w);
                }
            }
        }
        self.order.extend(extra);
    }

    pub fn named(mut self, name: impl Into<String>) -> Grammar {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// Variable order: ruled variables in declaration order, then any others
    /// that appear on right-hand sides.
    pub fn order(&self) -> &[Var] {
        &self.order
    }

    pub fn rule(&self, v: impl Into<Var>) -> Option<&Polynomial> {
        self.rules.get(&v.into())
    }

    pub fn rules(&self) -> impl Iterator<Item = (Var, &Polynomial)> {
        self.order
            .iter()
            .filter_map(|v| self.rules.get(v).map(|p| (*v, p)))
    }

    /// One application of the formal derivative.
    pub fn derive(&self, f: &Polynomial) -> Polynomial {
        let mut acc: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (m, c) in f.terms() {
            for &(v, e) in m.exponents() {
                let Some(rule) = self.rules.get(&v) else {
                    continue;
                };
                let base = m.with_exponent(v, e - 1);
                let scaled = c * e;
                for (rm, rc) in rule.terms() {
                    *acc.entry(base.mul(rm)).or_default() += &scaled * rc;
                }
            }
        }
        let order = if f.order().is_empty() {
            self.order.clone()
        } else {
            f.order().to_vec()
        };
        Polynomial::from_terms(acc).with_order_vars(&order)
    }

    /// `n` successive derivations; `iterate(f, 0) == f`.
    pub fn iterate(&self, f: &Polynomial, n: u32) -> Polynomial {
        let mut cur = f.clone();
        for _ in 0..n {
            cur = self.derive(&cur);
        }
        cur
    }

    /// `[f, D(f), ..., D^n(f)]`.
    pub fn orbit(&self, f: &Polynomial, n: u32) -> Vec<Polynomial> {
        let mut out = Vec::with_capacity(n as usize + 1);
        out.push(f.clone());
        for i in 0..n as usize {
            let next = self.derive(&out[i]);
            out.push(next);
        }
        out
    }

    /// Parses an expression using this grammar's variable order for printing.
    pub fn parse_expr(&self, input: &str) -> Result<Polynomial, ExprError> {
        expr::parse_ordered(input, &self.order)
    }
}

/// Parses the grammar-file format: `<identifier> -> <expression>` per line,
/// `#` comments, blank lines ignored. In strict mode every identifier on a
/// right-hand side must itself have a rule.
pub fn load_grammar(text: &str, strict: bool) -> Result<Grammar, GrammarError> {
    let mut rules: Vec<(Var, Polynomial, usize)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let Some((lhs, rhs)) = content.split_once("->") else {
            return Err(GrammarError::Syntax {
                line,
                message: "expected `<identifier> -> <expression>`".into(),
            });
        };
        let lhs = lhs.trim();
        let valid_ident = lhs
            .chars()
            .next()
            .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
            && lhs.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !valid_ident {
            return Err(GrammarError::Syntax {
                line,
                message: format!("`{lhs}` is not an identifier"),
            });
        }
        let v = Var::new(lhs);
        if rules.iter().any(|(w, _, _)| *w == v) {
            return Err(GrammarError::DuplicateRule {
                line,
                name: lhs.to_string(),
            });
        }
        let rhs = expr::parse(rhs).map_err(|source| GrammarError::Expr { line, source })?;
        rules.push((v, rhs, line));
    }
    if strict {
        for (_, rhs, line) in &rules {
            for w in rhs.variables() {
                if !rules.iter().any(|(v, _, _)| *v == w) {
                    return Err(GrammarError::UndeclaredToken {
                        line: *line,
                        name: w.name().to_string(),
                    });
                }
            }
        }
    }
    let mut g = Grammar::new(rules.into_iter().map(|(v, p, _)| (v, p)));
    let order = g.order.clone();
    for rhs in g.rules.values_mut() {
        *rhs = rhs.clone().with_order_vars(&order);
    }
    Ok(g)
}

pub fn load_grammar_file(path: impl AsRef<Path>, strict: bool) -> Result<Grammar, GrammarError> {
    let text = std::fs::read_to_string(path)?;
    load_grammar(&text, strict)
}

/// The rule sets used throughout the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Preset {
    /// `{x -> xy, y -> xy}`: Eulerian polynomials `A_n(x,y) = D^n(x)`.
    DumontEulerian,
    /// `{u -> uv, v -> 2u}`: the Eulerian grammar after `u = xy, v = x+y`.
    GammaEulerian,
    /// `{x -> xy, y -> x}`: Andre polynomials over 0-1-2 increasing trees.
    Andre,
    /// `{x -> xyz, y -> xyz, z -> xyz}`: second-order Eulerian polynomials.
    DumontTrivariate,
    /// `{u -> 3w, v -> 2uw, w -> vw}`: the trivariate grammar in the
    /// elementary symmetric functions.
    ETrivariate,
}

impl Preset {
    pub const ALL: [Preset; 5] = [
        Preset::DumontEulerian,
        Preset::GammaEulerian,
        Preset::Andre,
        Preset::DumontTrivariate,
        Preset::ETrivariate,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Preset::DumontEulerian => "dumont-eulerian",
            Preset::GammaEulerian => "gamma-eulerian",
            Preset::Andre => "andre",
            Preset::DumontTrivariate => "dumont-trivariate",
            Preset::ETrivariate => "e-trivariate",
        }
    }

    fn source(self) -> &'static str {
        match self {
            Preset::DumontEulerian => "x -> x*y\ny -> x*y",
            Preset::GammaEulerian => "u -> u*v\nv -> 2*u",
            Preset::Andre => "x -> x*y\ny -> x",
            Preset::DumontTrivariate => "x -> x*y*z\ny -> x*y*z\nz -> x*y*z",
            Preset::ETrivariate => "u -> 3*w\nv -> 2*u*w\nw -> v*w",
        }
    }

    pub fn grammar(self) -> Grammar {
        load_grammar(self.source(), true)
            .expect("preset grammars are well-formed")
            .named(self.name())
    }
}

impl FromStr for Preset {
    type Err = GrammarError;

    fn from_str(s: &str) -> Result<Preset, GrammarError> {
        Preset::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| GrammarError::UnknownPreset(s.to_string()))
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn check_index(n: u32) -> Result<(), GrammarError> {
    if n == 0 {
        Err(GrammarError::IndexOutOfRange(n))
    } else {
        Ok(())
    }
}

/// `A_n(x,y) = D^n(x)` under [`Preset::DumontEulerian`], for `n >= 1`.
pub fn eulerian(n: u32) -> Result<Polynomial, GrammarError> {
    check_index(n)?;
    let g = Preset::DumontEulerian.grammar();
    Ok(g.iterate(&Polynomial::var("x").with_order(["x", "y"]), n))
}

/// `C_n(x,y,z) = D^n(x)` under [`Preset::DumontTrivariate`], for `n >= 1`.
pub fn second_order(n: u32) -> Result<Polynomial, GrammarError> {
    check_index(n)?;
    let g = Preset::DumontTrivariate.grammar();
    Ok(g.iterate(&Polynomial::var("x").with_order(["x", "y", "z"]), n))
}

/// `E_n(x,y) = D^{n-1}(x)` under [`Preset::Andre`], for `n >= 1`.
pub fn andre(n: u32) -> Result<Polynomial, GrammarError> {
    check_index(n)?;
    let g = Preset::Andre.grammar();
    Ok(g.iterate(&Polynomial::var("x").with_order(["x", "y"]), n - 1))
}
