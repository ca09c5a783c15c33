//! Sparse multivariate Laurent polynomials with arbitrary-precision integer
//! coefficients.
//!
//! Variables are interned process-wide ([`Var`]), so new variables can show up
//! at any time (for instance when a grammar file is loaded). A [`Polynomial`]
//! also carries a declared variable order which only affects printing; two
//! polynomials are equal iff their term sets are equal.

use std::cmp::Ordering;
use std::collections::hash_map::Entry;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::{Arc, LazyLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("negative power {exponent} of a polynomial that is not a unit monomial")]
    NegativePowerOfNonMonomial { exponent: i64 },
    #[error("variable `{0}` is bound to a non-monomial but occurs with a negative exponent")]
    NonMonomialBinding(String),
    #[error("variable `{0}` is not bound")]
    UnboundVariable(String),
    #[error("variable `{0}` is zero but occurs with a negative exponent")]
    ZeroToNegativePower(String),
    #[error("value is not an integer: {0}")]
    NonIntegral(String),
}

struct Interner {
    names: Vec<Arc<str>>,
    ids: HashMap<Arc<str>, u32>,
}

static INTERNER: LazyLock<RwLock<Interner>> = LazyLock::new(|| {
    RwLock::new(Interner {
        names: Vec::new(),
        ids: HashMap::new(),
    })
});

/// An interned variable name.
///
/// The derived `Ord` follows interning order and is only used for map keys;
/// canonical printing uses names and the declared variable order instead.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var(u32);

impl Var {
    pub fn new(name: &str) -> Var {
        if let Some(&id) = INTERNER.read().unwrap().ids.get(name) {
            return Var(id);
        }
        let mut interner = INTERNER.write().unwrap();
        if let Some(&id) = interner.ids.get(name) {
            return Var(id);
        }
        let id = interner.names.len() as u32;
        let name: Arc<str> = Arc::from(name);
        interner.names.push(name.clone());
        interner.ids.insert(name, id);
        Var(id)
    }

    pub fn name(self) -> Arc<str> {
        INTERNER.read().unwrap().names[self.0 as usize].clone()
    }
}

impl From<&str> for Var {
    fn from(name: &str) -> Var {
        Var::new(name)
    }
}

impl From<&String> for Var {
    fn from(name: &String) -> Var {
        Var::new(name)
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// A Laurent monomial: variables with nonzero (possibly negative) exponents,
/// kept sorted by [`Var`]. The empty monomial is 1.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<(Var, i64)>);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial(Vec::new())
    }

    pub fn var(v: Var) -> Monomial {
        Monomial(vec![(v, 1)])
    }

    /// Builds a monomial from `(variable, exponent)` pairs; repeated variables
    /// have their exponents added and zero exponents are dropped.
    pub fn from_pairs<I: IntoIterator<Item = (Var, i64)>>(pairs: I) -> Monomial {
        let mut map: BTreeMap<Var, i64> = BTreeMap::new();
        for (v, e) in pairs {
            *map.entry(v).or_insert(0) += e;
        }
        Monomial(map.into_iter().filter(|&(_, e)| e != 0).collect())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponents(&self) -> &[(Var, i64)] {
        &self.0
    }

    pub fn exponent(&self, v: Var) -> i64 {
        self.0
            .binary_search_by_key(&v, |&(w, _)| w)
            .map(|i| self.0[i].1)
            .unwrap_or(0)
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    let e = a[i].1 + b[j].1;
                    if e != 0 {
                        out.push((a[i].0, e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    pub fn pow(&self, e: i64) -> Monomial {
        if e == 0 {
            return Monomial::one();
        }
        Monomial(self.0.iter().map(|&(v, d)| (v, d * e)).collect())
    }

    /// Same monomial with the exponent of `v` replaced.
    pub fn with_exponent(&self, v: Var, e: i64) -> Monomial {
        let mut out = self.0.clone();
        match out.binary_search_by_key(&v, |&(w, _)| w) {
            Ok(i) if e == 0 => {
                out.remove(i);
            }
            Ok(i) => out[i].1 = e,
            Err(_) if e == 0 => {}
            Err(i) => out.insert(i, (v, e)),
        }
        Monomial(out)
    }

    /// Renames variables; used for permuting the variables of a polynomial.
    pub fn rename(&self, map: &HashMap<Var, Var>) -> Monomial {
        Monomial::from_pairs(
            self.0
                .iter()
                .map(|&(v, e)| (map.get(&v).copied().unwrap_or(v), e)),
        )
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, (v, e)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Exact sparse Laurent polynomial over the integers.
#[derive(Clone, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigInt>,
    order: Vec<Var>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({})", crate::expr::print(self))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::expr::print(self))
    }
}

fn merge_order(a: &[Var], b: &[Var]) -> Vec<Var> {
    if b.is_empty() || a == b {
        return a.to_vec();
    }
    let mut out = a.to_vec();
    for v in b {
        if !out.contains(v) {
            out.push(*v);
        }
    }
    out
}

fn accumulate(terms: &mut BTreeMap<Monomial, BigInt>, m: Monomial, c: BigInt) {
    if c.is_zero() {
        return;
    }
    match terms.entry(m) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

impl Polynomial {
    pub fn zero() -> Polynomial {
        Polynomial::default()
    }

    pub fn one() -> Polynomial {
        Polynomial::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Polynomial {
        Polynomial::term(c, Monomial::one())
    }

    pub fn term(c: impl Into<BigInt>, m: Monomial) -> Polynomial {
        let mut terms = BTreeMap::new();
        accumulate(&mut terms, m, c.into());
        Polynomial {
            terms,
            order: Vec::new(),
        }
    }

    pub fn var(v: impl Into<Var>) -> Polynomial {
        Polynomial::term(1, Monomial::var(v.into()))
    }

    /// Collects `(monomial, coefficient)` pairs, summing duplicates.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigInt)>>(iter: I) -> Polynomial {
        let mut terms = BTreeMap::new();
        for (m, c) in iter {
            accumulate(&mut terms, m, c);
        }
        Polynomial {
            terms,
            order: Vec::new(),
        }
    }

    /// Declares the variable order used for printing. Variables that occur in
    /// the polynomial but not in `order` print after it, alphabetically.
    pub fn with_order<V: Into<Var>, I: IntoIterator<Item = V>>(mut self, order: I) -> Polynomial {
        self.order = order.into_iter().map(Into::into).collect();
        self
    }

    pub(crate) fn with_order_vars(mut self, order: &[Var]) -> Polynomial {
        self.order = order.to_vec();
        self
    }

    pub fn order(&self) -> &[Var] {
        &self.order
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// The single term of a one-term polynomial.
    pub fn as_term(&self) -> Option<(&Monomial, &BigInt)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn variables(&self) -> BTreeSet<Var> {
        self.terms
            .keys()
            .flat_map(|m| m.exponents().iter().map(|&(v, _)| v))
            .collect()
    }

    /// Declared order followed by any further variables, alphabetically.
    pub fn print_order(&self) -> Vec<Var> {
        let mut out = self.order.clone();
        let mut rest: Vec<(Arc<str>, Var)> = self
            .variables()
            .into_iter()
            .filter(|v| !self.order.contains(v))
            .map(|v| (v.name(), v))
            .collect();
        rest.sort();
        out.extend(rest.into_iter().map(|(_, v)| v));
        out
    }

    /// Terms in graded-lexicographic order (higher total degree first, ties
    /// broken by exponents along [`Polynomial::print_order`]).
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &BigInt)> {
        let order = self.print_order();
        let mut keyed: Vec<(Vec<i64>, &Monomial, &BigInt)> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut key = Vec::with_capacity(order.len() + 1);
                key.push(m.degree());
                key.extend(order.iter().map(|&v| m.exponent(v)));
                (key, m, c)
            })
            .collect();
        keyed.sort_by(|a, b| b.0.cmp(&a.0));
        keyed.into_iter().map(|(_, m, c)| (m, c)).collect()
    }

    /// Leading term under graded-lex order with respect to `order`.
    pub fn leading_term(&self, order: &[Var]) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().max_by(|(a, _), (b, _)| {
            a.degree().cmp(&b.degree()).then_with(|| {
                order
                    .iter()
                    .map(|&v| a.exponent(v).cmp(&b.exponent(v)))
                    .find(|o| o.is_ne())
                    .unwrap_or(Ordering::Equal)
            })
        })
    }

    pub fn scale(&self, c: &BigInt) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero().with_order_vars(&self.order);
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, d)| (m.clone(), d * c)).collect(),
            order: self.order.clone(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &BigInt) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero().with_order_vars(&self.order);
        }
        Polynomial {
            terms: self.terms.iter().map(|(n, d)| (n.mul(m), d * c)).collect(),
            order: self.order.clone(),
        }
    }

    /// Exact power. Negative exponents need a single term with coefficient ±1.
    pub fn pow(&self, e: i64) -> Result<Polynomial, PolyError> {
        if e < 0 {
            let (m, c) = self
                .as_term()
                .filter(|(_, c)| c.abs().is_one())
                .ok_or(PolyError::NegativePowerOfNonMonomial { exponent: e })?;
            let sign = if c.is_negative() && e % 2 != 0 { -1 } else { 1 };
            return Ok(Polynomial::term(sign, m.pow(e)).with_order_vars(&self.order));
        }
        if let Some((m, c)) = self.as_term() {
            return Ok(
                Polynomial::term(num_traits::pow(c.clone(), e as usize), m.pow(e))
                    .with_order_vars(&self.order),
            );
        }
        let mut result = Polynomial::one().with_order_vars(&self.order);
        let mut base = self.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(result)
    }

    pub fn partial_derivative(&self, v: impl Into<Var>) -> Polynomial {
        let v = v.into();
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            if e != 0 {
                accumulate(&mut terms, m.with_exponent(v, e - 1), c * e);
            }
        }
        Polynomial {
            terms,
            order: self.order.clone(),
        }
    }

    /// Simultaneous substitution. A variable occurring with a negative
    /// exponent must be bound to a unit monomial.
    pub fn substitute(&self, bindings: &HashMap<Var, Polynomial>) -> Result<Polynomial, PolyError> {
        let mut order: Vec<Var> = Vec::new();
        for v in &self.order {
            match bindings.get(v) {
                Some(p) => order = merge_order(&order, &p.print_order()),
                None => order = merge_order(&order, &[*v]),
            }
        }
        let mut cache: HashMap<(Var, i64), Polynomial> = HashMap::new();
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut fixed = Vec::new();
            let mut acc = Polynomial::constant(c.clone());
            for &(v, e) in m.exponents() {
                let Some(p) = bindings.get(&v) else {
                    fixed.push((v, e));
                    continue;
                };
                let power = match cache.entry((v, e)) {
                    Entry::Occupied(slot) => slot.into_mut(),
                    Entry::Vacant(slot) => slot.insert(
                        p.pow(e)
                            .map_err(|_| PolyError::NonMonomialBinding(v.name().to_string()))?,
                    ),
                };
                acc = &acc * &*power;
            }
            out += acc.mul_monomial(&Monomial::from_pairs(fixed), &BigInt::one());
        }
        out.order = order;
        Ok(out)
    }

    /// Exact value at an integer point. Negative exponents are allowed as long
    /// as the final value is an integer.
    pub fn eval_integers(&self, point: &HashMap<Var, BigInt>) -> Result<BigInt, PolyError> {
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut value = BigRational::from_integer(c.clone());
            for &(v, e) in m.exponents() {
                let x = point
                    .get(&v)
                    .ok_or_else(|| PolyError::UnboundVariable(v.name().to_string()))?;
                if e < 0 && x.is_zero() {
                    return Err(PolyError::ZeroToNegativePower(v.name().to_string()));
                }
                let x = BigRational::from_integer(x.clone());
                let factor = if e >= 0 {
                    num_traits::pow(x, e as usize)
                } else {
                    num_traits::pow(x.recip(), (-e) as usize)
                };
                value *= factor;
            }
            total += value;
        }
        if total.is_integer() {
            Ok(total.to_integer())
        } else {
            Err(PolyError::NonIntegral(total.to_string()))
        }
    }

    /// Evaluates with every variable of the polynomial set to 1.
    pub fn eval_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Swaps or permutes variables according to `map`.
    pub fn rename(&self, map: &HashMap<Var, Var>) -> Polynomial {
        Polynomial::from_terms(self.terms.iter().map(|(m, c)| (m.rename(map), c.clone())))
            .with_order_vars(&self.order)
    }

    /// True iff invariant under every transposition of `vars`.
    pub fn is_symmetric(&self, vars: &[Var]) -> bool {
        for i in 0..vars.len() {
            for j in i + 1..vars.len() {
                let swap = HashMap::from([(vars[i], vars[j]), (vars[j], vars[i])]);
                if self.rename(&swap) != *self {
                    return false;
                }
            }
        }
        true
    }

    /// Common total degree of all terms; `None` if degrees differ or the
    /// polynomial is zero.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// `[{"monomial": {var: exponent}, "coeff": "decimal"}, ...]` in canonical
    /// print order.
    pub fn to_json(&self) -> serde_json::Value {
        let order = self.print_order();
        let terms = self
            .sorted_terms()
            .into_iter()
            .map(|(m, c)| {
                let mut mono = serde_json::Map::new();
                for v in &order {
                    let e = m.exponent(*v);
                    if e != 0 {
                        mono.insert(v.name().to_string(), e.into());
                    }
                }
                serde_json::json!({ "monomial": mono, "coeff": c.to_string() })
            })
            .collect();
        serde_json::Value::Array(terms)
    }
}

impl<'a> Add<&'a Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(mut self, rhs: Polynomial) -> Polynomial {
        self += rhs;
        self
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            accumulate(&mut self.terms, m.clone(), c.clone());
        }
        self.order = merge_order(&self.order, &rhs.order);
    }
}

impl AddAssign for Polynomial {
    fn add_assign(&mut self, rhs: Polynomial) {
        self.order = merge_order(&self.order, &rhs.order);
        for (m, c) in rhs.terms {
            accumulate(&mut self.terms, m, c);
        }
    }
}

impl<'a> Sub<&'a Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(mut self, rhs: Polynomial) -> Polynomial {
        self -= &rhs;
        self
    }
}

impl SubAssign<&Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            accumulate(&mut self.terms, m.clone(), -c);
        }
        self.order = merge_order(&self.order, &rhs.order);
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
            order: self.order.clone(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl<'a> Mul<&'a Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        let mut terms = BTreeMap::new();
        for (a, c) in &self.terms {
            for (b, d) in &rhs.terms {
                accumulate(&mut terms, a.mul(b), c * d);
            }
        }
        Polynomial {
            terms,
            order: merge_order(&self.order, &rhs.order),
        }
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl From<i64> for Polynomial {
    fn from(c: i64) -> Polynomial {
        Polynomial::constant(c)
    }
}
